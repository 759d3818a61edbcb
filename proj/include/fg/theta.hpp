// Riemann theta functions, integer symplectic reduction and Martens transformations.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "fg/periods.hpp"

namespace fg {

// dense integer matrix, exact
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
    static IntMatrix identity(int n);
    static IntMatrix J(int g);  // [[0, I], [-I, 0]]

    int rows() const { return r_; }
    int cols() const { return c_; }
    Integer& operator()(int i, int j) { return d_[static_cast<std::size_t>(i * c_ + j)]; }
    const Integer& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i * c_ + j)]; }

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b);
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
    CMatrix to_complex() const;
    std::string str() const;
    nlohmann::json to_json() const;
    static IntMatrix from_json(const nlohmann::json& j);

private:
    int r_ = 0, c_ = 0;
    std::vector<Integer> d_;
};

bool is_symplectic(const IntMatrix& T);  // T J T^T == J
IntMatrix symplectic_inverse(const IntMatrix& T);  // J^-1 T^T J

// Siegel upper half-space check: symmetric to 1e-9 and Im tau positive definite
void validate_siegel(const CMatrix& tau);

struct ThetaChar {
    std::vector<Rational> a, b;
    static ThetaChar zero(int g);
    static ThetaChar parse(const std::string& s);  // "a1,a2;b1,b2"
    // entries reduced to [0, 1); theta[a;b] = phase * theta[reduced]
    std::pair<ThetaChar, cplx> reduced() const;
    std::string str() const;
};

// sum over n of exp(i pi (n+a)^T tau (n+a) + 2 pi i (n+a)^T (v+b)), truncated in max norm
// around the Gaussian peak so the neglected tail is below eps times the peak term
cplx theta(const Eigen::VectorXcd& v, const CMatrix& tau, const ThetaChar& ch, double eps = 1e-14,
           Exec ex = Exec::parallel);
int theta_radius(const Eigen::VectorXcd& v, const CMatrix& tau, double eps);

// theta_1..theta_4 from theta with characteristics; theta_1 = -theta[1/2;1/2]
std::array<cplx, 4> jacobi_thetas(cplx v, cplx tau, double eps = 1e-15);

// h > 0 with m J m^T = [[0, -h], [h, 0]] up to sign
Integer hopf_number(const IntMatrix& m);

struct StandardForm {
    IntMatrix S;         // symplectic, m S = standard
    IntMatrix standard;  // rows: +-e_1 and e_2 - h e_{g+1}
};
StandardForm standard_form(const IntMatrix& m);
bool is_standard_form(const IntMatrix& s);

// [A B] = [I tau] (J T)^-1, tau~ = A^-1 B
CMatrix transform_tau(const CMatrix& tau, const IntMatrix& T);

enum class JacobiArgument { plain, pi_scaled };

struct Genus2Reduction {
    double max_residual = 0;
    JacobiArgument convention = JacobiArgument::plain;
    double other_convention_residual = 0;
};
// Theta(v, tau) = 1/2 th3(v1/2, t1/2) th3(v1/2 - v2, t2/2) + 1/2 th4(...) th4(...)
double genus2_identity_residual(const Eigen::Vector2cd& v, const CMatrix& tau, cplx tau1, cplx tau2,
                                JacobiArgument conv, double eps = 1e-15);
Genus2Reduction verify_genus2_reduction(double xi1, double xi2, double xi3, int samples, double eps,
                                        unsigned seed = 7);

struct ReductionCertificate {
    IntMatrix m;
    Integer hopf;
    IntMatrix transform;  // symplectic T with m T^-1 = standard
    IntMatrix standard_form;
    CMatrix tau_before, tau_after;
    cplx tau_e;                  // elliptic modulus of the relation
    double relation_residual = 0;
    std::string note;
    nlohmann::json to_json() const;
};

// m T^-1 must be standard and m a relation of tau: u [I tau] = m_1 + tau_e m_2
double pi_relation_residual(const CMatrix& tau, const IntMatrix& m, cplx* tau_e = nullptr);
ReductionCertificate reduce_with(const CMatrix& tau, const IntMatrix& m, const IntMatrix& T);
ReductionCertificate reduce(const CMatrix& tau, const IntMatrix& m);  // T from standard_form

enum class Genus3Route {
    computed,  // relation M with the transform from standard_form
    stored     // stored transform S0 with the relation M' it standardises
};

struct Genus3Chain {
    std::vector<ReductionCertificate> certificates;
    cplx factor1, factor2;  // genus-1 moduli split off at each stage
    int breadth = 0;        // product of the Hopf numbers
    std::string route;
    nlohmann::json to_json() const;
};

// relations, transforms and stage-2 data of the Halphen reduction
IntMatrix halphen_relation();
IntMatrix halphen_alternate_relation();
IntMatrix halphen_stored_transform();
IntMatrix halphen_stage2_relation();
IntMatrix halphen_stage2_transform();

Genus3Chain genus3_reduction_chain(const CMatrix& tau, Genus3Route route = Genus3Route::computed);

}  // namespace fg
