// Lame spectral curves from the finite-form eigenfunction ansatz.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fg/algebra.hpp"

namespace fg {

enum class AnsatzKind { symmetric, attached };

// prefactor * polynomial of degree poly_degree in P = wp(xi); s_i^2 = P - e_i
struct AnsatzType {
    bool odd = false;
    AnsatzKind kind = AnsatzKind::symmetric;
    int attached_root = 0;  // 1..3 for attached types, 0 otherwise
    std::array<int, 3> prefactor{0, 0, 0};
    int poly_degree = -1;  // -1: empty type
    int dim() const { return poly_degree + 1; }
    bool empty() const { return poly_degree < 0; }
    std::string name() const;
    std::string prefactor_str() const;
};

std::vector<AnsatzType> enumerate_types(int n);

// L = d^2/dxi^2 - n(n+1)P on {Q P^r}; column r is L(Q P^r)/Q in that basis.
// Attached types use the generic root e.
PolyMatrix operator_matrix(int n, const AnsatzType& t);

struct SpectralCurveResult {
    int n = 0;
    MultiPoly f_s;       // symmetric factor in z, g2, g3
    MultiPoly f_i;       // attached factor in z, e, g2, g3
    MultiPoly expanded;  // f_s * f_1 f_2 f_3 after symmetric reduction
    Rational normalization = 1;  // expanded = normalization * monic
    nlohmann::json to_json() const;
    std::string latex() const;
};

constexpr int kMaxLameN = 10;
SpectralCurveResult lame_curve(int n, int max_n = kMaxLameN);

// numeric roots of 4t^3 - g2 t - g3
std::array<cplx, 3> weierstrass_roots(double g2, double g3);

// all 2n+1 band edges from the four ansatz matrices at numeric (g2, g3)
std::vector<cplx> numeric_band_edges(int n, double g2, double g3);

// roots of a univariate polynomial in z with numeric parameter values
std::vector<cplx> numeric_roots(const MultiPoly& p, const std::string& var,
                                const std::map<std::string, cplx>& at);

// Exact eigenfunction: kernel vector of (z* I - M) modulo the relation defining z*.
// The result is projective (a nonzero adjugate column); root_rel gives root^d = value.
std::vector<MultiPoly> eigenfunction_exact(int n, const AnsatzType& t, const Relation& root_rel);

// Floating eigenfunction with last nonzero entry 1; throws if z* is not an eigenvalue.
Eigen::VectorXcd eigenfunction_numeric(int n, const AnsatzType& t, cplx z_star, double g2, double g3,
                                       cplx e_value, double tol = 1e-9);

// Substitute the ansatz solution into w'' - n(n+1) P w - z w as a Laurent series in xi.
// Exact mode returns the zero polynomial iff every coefficient through `order` vanishes.
MultiPoly series_residual_exact(int n, const AnsatzType& t, const std::vector<MultiPoly>& coeffs,
                                const MultiPoly& z_star, const std::vector<Relation>& rels, int order);
double series_residual_numeric(int n, const AnsatzType& t, const Eigen::VectorXcd& coeffs, cplx z_star,
                               double g2, double g3, cplx e_value, int order);

// Laurent coefficients c_k of P = xi^-2 + sum_{k>=2} c_k xi^{2k-2}
std::vector<MultiPoly> wp_laurent_coefficients(int kmax);

}  // namespace fg
