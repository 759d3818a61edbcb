#include <cmath>
#include <numbers>
#include <random>

#include "fg/theta.hpp"

namespace fg {

namespace {

Integer floordiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// column operations on m, accumulated in U, so that m_original * U = m
class Reducer {
public:
    explicit Reducer(const IntMatrix& m) : m_(m), g_(m.cols() / 2), U_(IntMatrix::identity(m.cols())) {}

    const IntMatrix& m() const { return m_; }
    const IntMatrix& U() const { return U_; }
    int g() const { return g_; }
    const Integer& at(int r, int c) const { return m_(r, c); }

    // x_i += k y_i (src_is_y) or y_i += k x_i
    void pair_add(int i, bool src_is_y, const Integer& k) {
        IntMatrix E = IntMatrix::identity(2 * g_);
        if (src_is_y) E(i + g_, i) = k;
        else E(i, i + g_) = k;
        apply(E);
    }
    // x_j += k x_i, y_i -= k y_j
    void cross(int i, int j, const Integer& k) {
        IntMatrix E = IntMatrix::identity(2 * g_);
        E(i, j) = k;
        E(j + g_, i + g_) = -k;
        apply(E);
    }
    void neg(int i) {
        IntMatrix E = IntMatrix::identity(2 * g_);
        E(i, i) = -1;
        E(i + g_, i + g_) = -1;
        apply(E);
    }
    // (x_i, y_i) -> (y_i, -x_i)
    void swap_xy(int i) {
        IntMatrix E = IntMatrix::identity(2 * g_);
        E(i, i) = 0;
        E(i + g_, i + g_) = 0;
        E(i + g_, i) = 1;
        E(i, i + g_) = -1;
        apply(E);
    }
    void pair_swap(int i, int j) {
        IntMatrix E = IntMatrix::identity(2 * g_);
        for (auto [a, b] : {std::pair{i, j}, std::pair{i + g_, j + g_}}) {
            E(a, a) = 0;
            E(b, b) = 0;
            E(a, b) = 1;
            E(b, a) = 1;
        }
        apply(E);
    }

    // Euclid on (x_i, y_i) until y_i = 0
    void reduce_pair(int row, int i) {
        while (m_(row, i + g_) != 0) {
            const Integer x = m_(row, i), y = m_(row, i + g_);
            if (x == 0) {
                swap_xy(i);
                continue;
            }
            if (abs(y) >= abs(x)) pair_add(i, false, -floordiv(y, x));
            else pair_add(i, true, -floordiv(x, y));
        }
    }

    // gather the x entries of `pairs` into x_target, all y in pairs being zero
    void reduce_x(int row, int target, const std::vector<int>& pairs) {
        auto nonzero = [&] {
            std::vector<int> nz;
            for (int i : pairs)
                if (m_(row, i) != 0) nz.push_back(i);
            return nz;
        };
        for (auto nz = nonzero(); nz.size() > 1; nz = nonzero()) {
            int p = nz[0];
            for (int i : nz)
                if (abs(m_(row, i)) < abs(m_(row, p))) p = i;
            for (int i : nz)
                if (i != p) cross(p, i, -floordiv(m_(row, i), m_(row, p)));
        }
        auto nz = nonzero();
        if (!nz.empty() && nz[0] != target) pair_swap(nz[0], target);
    }

private:
    void apply(const IntMatrix& E) {
        m_ = m_ * E;
        U_ = U_ * E;
    }
    IntMatrix m_;
    int g_;
    IntMatrix U_;
};

std::pair<double, cplx> relation_fit(const Eigen::RowVectorXcd& P, const Eigen::RowVectorXcd& Q) {
    const double qq = Q.squaredNorm();
    const cplx te = qq == 0 ? cplx(0) : -(Q.conjugate() * P.transpose()).value() / qq;
    return {(P + te * Q).norm() / std::max(1.0, P.norm()), te};
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : r_(rows), c_(cols), d_(static_cast<std::size_t>(rows * cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    r_ = static_cast<int>(rows.size());
    c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != c_) throw std::invalid_argument("ragged integer matrix");
        for (long v : row) d_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::J(int g) {
    IntMatrix m(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        m(i, i + g) = 1;
        m(i + g, i) = -1;
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("integer matrix product: shape mismatch");
    IntMatrix p(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.c_; ++j) p(i, j) += a(i, k) * b(k, j);
        }
    return p;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_; }

CMatrix IntMatrix::to_complex() const {
    CMatrix m(r_, c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).get_d();
    return m;
}

std::string IntMatrix::str() const {
    std::string s = "[";
    for (int i = 0; i < r_; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < c_; ++j) s += (j ? "," : "") + (*this)(i, j).get_str();
        s += "]";
    }
    return s + "]";
}

nlohmann::json IntMatrix::to_json() const {
    auto out = nlohmann::json::array();
    for (int i = 0; i < r_; ++i) {
        auto row = nlohmann::json::array();
        for (int j = 0; j < c_; ++j) {
            const Integer& v = (*this)(i, j);
            if (v.fits_slong_p()) row.push_back(v.get_si());
            else row.push_back(v.get_str());
        }
        out.push_back(row);
    }
    return out;
}

IntMatrix IntMatrix::from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) throw std::invalid_argument("integer matrix must be a nested array");
    IntMatrix m(static_cast<int>(j.size()), static_cast<int>(j[0].size()));
    for (int r = 0; r < m.r_; ++r) {
        if (j[static_cast<std::size_t>(r)].size() != static_cast<std::size_t>(m.c_))
            throw std::invalid_argument("ragged integer matrix");
        for (int c = 0; c < m.c_; ++c) {
            const auto& e = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (e.is_number_integer()) m(r, c) = Integer(e.get<long>());
            else if (e.is_string()) m(r, c) = Integer(e.get<std::string>());
            else throw std::invalid_argument("integer matrix entry is not an integer");
        }
    }
    return m;
}

bool is_symplectic(const IntMatrix& T) {
    if (T.rows() != T.cols() || T.rows() % 2) return false;
    const IntMatrix J = IntMatrix::J(T.rows() / 2);
    return T * J * T.transpose() == J;
}

IntMatrix symplectic_inverse(const IntMatrix& T) {
    if (!is_symplectic(T)) throw std::invalid_argument("matrix is not symplectic");
    const IntMatrix J = IntMatrix::J(T.rows() / 2);
    IntMatrix Jinv = J.transpose();
    return Jinv * T.transpose() * J;
}

Integer hopf_number(const IntMatrix& m) {
    if (m.rows() != 2 || m.cols() % 2 || m.cols() < 4) throw std::invalid_argument("relation must be 2 x 2g with g >= 2");
    IntMatrix q = m * IntMatrix::J(m.cols() / 2) * m.transpose();
    if (q(0, 0) != 0 || q(1, 1) != 0 || q(0, 1) != -q(1, 0)) throw std::logic_error("m J m^T is not antisymmetric");
    if (q(0, 1) == 0) throw std::invalid_argument("degenerate relation: m J m^T = 0");
    return abs(q(0, 1));
}

bool is_standard_form(const IntMatrix& s) {
    if (s.rows() != 2 || s.cols() % 2 || s.cols() < 4) return false;
    const int g = s.cols() / 2;
    for (int j = 0; j < s.cols(); ++j) {
        if (j != 0 && s(0, j) != 0) return false;
        if (j != 1 && j != g && s(1, j) != 0) return false;
    }
    return abs(s(0, 0)) == 1 && s(1, 1) == 1 && s(1, g) != 0;
}

StandardForm standard_form(const IntMatrix& m) {
    hopf_number(m);
    Reducer s(m);
    const int g = s.g();
    std::vector<int> all, rest;
    for (int i = 0; i < g; ++i) {
        all.push_back(i);
        if (i) rest.push_back(i);
    }
    for (int i = 0; i < g; ++i) s.reduce_pair(0, i);
    s.reduce_x(0, 0, all);
    if (abs(s.at(0, 0)) != 1) throw std::invalid_argument("first row of the relation is not primitive");
    for (int it = 0;; ++it) {
        if (it > 10000) throw std::runtime_error("standard form did not converge");
        for (int i = 1; i < g; ++i) s.reduce_pair(1, i);
        s.reduce_x(1, 1, rest);
        const Integer a = s.at(1, 0), d = s.at(1, 1), b = s.at(1, g);
        if (a == 0) break;
        if (b != 0 && abs(a) >= abs(b)) {
            s.pair_add(0, true, -floordiv(a, b));
            continue;
        }
        if (d != 0) {
            s.cross(1, 0, -floordiv(a, d));
            continue;
        }
        throw std::runtime_error("standard form reduction stuck");
    }
    if (s.at(1, 1) < 0) s.neg(1);
    if (s.at(1, 1) != 1) throw std::invalid_argument("second row not reducible to a unit x-entry");
    if (s.at(1, g) > 0) s.neg(0);
    return {s.U(), s.m()};
}

CMatrix transform_tau(const CMatrix& tau, const IntMatrix& T) {
    validate_siegel(tau);
    const int g = static_cast<int>(tau.rows());
    if (T.rows() != 2 * g) throw std::invalid_argument("transform size does not match tau");
    const CMatrix inv = symplectic_inverse(IntMatrix::J(g) * T).to_complex();
    CMatrix IT(g, 2 * g);
    IT << CMatrix::Identity(g, g), tau;
    const CMatrix AB = IT * inv;
    CMatrix out = AB.leftCols(g).partialPivLu().solve(AB.rightCols(g));
    out = (out + out.transpose()) / 2.0;
    validate_siegel(out);
    return out;
}

double genus2_identity_residual(const Eigen::Vector2cd& v, const CMatrix& tau, cplx tau1, cplx tau2,
                                JacobiArgument conv, double eps) {
    const double s = conv == JacobiArgument::plain ? 1.0 : std::numbers::pi;
    const cplx lhs = theta(v, tau, ThetaChar::zero(2), eps, Exec::serial);
    const auto a = jacobi_thetas(s * v(0) / 2.0, tau1 / 2.0, eps);
    const auto b = jacobi_thetas(s * (v(0) / 2.0 - v(1)), tau2 / 2.0, eps);
    const cplx rhs = 0.5 * a[2] * b[2] + 0.5 * a[3] * b[3];
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

Genus2Reduction verify_genus2_reduction(double xi1, double xi2, double xi3, int samples, double eps, unsigned seed) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    const Genus2Periods P = genus2_periods(xi1, xi2, xi3);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> re(-1, 1), im(-0.5, 0.5);
    Genus2Reduction out;
    std::vector<Eigen::Vector2cd> vs;
    for (int i = 0; i < samples; ++i) vs.emplace_back(cplx(re(rng), im(rng)), cplx(re(rng), im(rng)));
    for (auto& v : vs)
        out.max_residual = std::max(out.max_residual, genus2_identity_residual(v, P.data.tau, P.tau1, P.tau2,
                                                                               JacobiArgument::plain, eps));
    out.other_convention_residual =
        genus2_identity_residual(vs[0], P.data.tau, P.tau1, P.tau2, JacobiArgument::pi_scaled, eps);
    if (out.max_residual > 1e-8) {
        for (auto& v : vs)
            out.other_convention_residual =
                std::max(out.other_convention_residual,
                         genus2_identity_residual(v, P.data.tau, P.tau1, P.tau2, JacobiArgument::pi_scaled, eps));
        throw std::runtime_error("genus-2 theta identity fails under both argument conventions: plain " +
                                 std::to_string(out.max_residual) + ", pi-scaled " +
                                 std::to_string(out.other_convention_residual));
    }
    return out;
}

double pi_relation_residual(const CMatrix& tau, const IntMatrix& m, cplx* tau_e) {
    const int g = static_cast<int>(tau.rows());
    if (m.rows() != 2 || m.cols() != 2 * g) throw std::invalid_argument("relation size does not match tau");
    const CMatrix mc = m.to_complex();
    auto row = [&](int r) -> Eigen::RowVectorXcd { return mc.row(r).head(g) * tau - mc.row(r).tail(g); };
    const Eigen::RowVectorXcd P = row(0), Q = row(1);
    auto [r1, t1] = relation_fit(P, Q);
    auto [r2, t2] = relation_fit(Q, P);
    if (tau_e) *tau_e = r1 <= r2 ? t1 : (t2 == 0.0 ? cplx(INFINITY) : 1.0 / t2);
    return std::min(r1, r2);
}

nlohmann::json ReductionCertificate::to_json() const {
    return {{"m", m.to_json()},
            {"hopf", hopf.get_si()},
            {"transform", transform.to_json()},
            {"standard_form", standard_form.to_json()},
            {"tau_before", matrix_json(tau_before)},
            {"tau_after", matrix_json(tau_after)},
            {"tau_e", complex_json(tau_e)},
            {"relation_residual", relation_residual},
            {"note", note}};
}

ReductionCertificate reduce_with(const CMatrix& tau, const IntMatrix& m, const IntMatrix& T) {
    ReductionCertificate c;
    c.m = m;
    c.hopf = hopf_number(m);
    if (!is_symplectic(T)) throw std::invalid_argument("transform is not symplectic");
    c.transform = T;
    c.standard_form = m * symplectic_inverse(T);
    if (!is_standard_form(c.standard_form))
        throw std::invalid_argument("m T^-1 = " + c.standard_form.str() + " is not in standard form");
    c.tau_before = tau;
    c.relation_residual = pi_relation_residual(tau, m, &c.tau_e);
    c.tau_after = transform_tau(tau, T);
    return c;
}

ReductionCertificate reduce(const CMatrix& tau, const IntMatrix& m) {
    StandardForm sf = standard_form(m);
    return reduce_with(tau, m, symplectic_inverse(sf.S));
}

IntMatrix halphen_relation() { return {{-1, 1, 1, 1, -1, -2}, {0, 0, 3, 1, -1, 1}}; }

IntMatrix halphen_alternate_relation() { return {{-1, 1, -2, 0, 0, -3}, {0, 0, 3, 1, -1, 1}}; }

IntMatrix halphen_stored_transform() {
    return {{1, 3, -1, 0, -6, 2}, {0, -1, -1, 0, 1, -1}, {0, 1, 0, -3, -1, 0},
            {0, 0, 0, 1, 0, 0},   {0, 0, 0, -1, 0, -1},  {0, -2, 0, 2, 3, -1}};
}

IntMatrix halphen_stage2_relation() { return {{-2, 0, -25, 0}, {-4, 0, -52, -1}}; }

IntMatrix halphen_stage2_transform() { return {{-2, 0, -25, 0}, {0, 0, 0, -1}, {-1, 0, -13, 0}, {0, 1, 0, -1}}; }

nlohmann::json Genus3Chain::to_json() const {
    auto certs = nlohmann::json::array();
    for (auto& c : certificates) certs.push_back(c.to_json());
    return {{"route", route},
            {"certificates", certs},
            {"factor1", complex_json(factor1)},
            {"factor2", complex_json(factor2)},
            {"breadth", breadth}};
}

Genus3Chain genus3_reduction_chain(const CMatrix& tau, Genus3Route route) {
    if (tau.rows() != 3) throw std::invalid_argument("genus-3 chain needs a 3 x 3 tau");
    Genus3Chain ch;
    ReductionCertificate c1;
    if (route == Genus3Route::computed) {
        ch.route = "computed";
        c1 = reduce(tau, halphen_relation());
    } else {
        ch.route = "stored";
        // the stored transform S0 satisfies M' S0 = standard
        c1 = reduce_with(tau, halphen_alternate_relation(), symplectic_inverse(halphen_stored_transform()));
    }
    ch.factor1 = c1.tau_after(0, 0);
    const long h1 = c1.hopf.get_si();
    CMatrix D = CMatrix::Identity(2, 2);
    D(0, 0) = static_cast<double>(h1);
    const CMatrix t2 = D * c1.tau_after.bottomRightCorner(2, 2) * D;
    ch.certificates.push_back(std::move(c1));

    ReductionCertificate c2 = reduce_with(t2, halphen_stage2_relation(), halphen_stage2_transform());
    if (c2.relation_residual > 1e-8)
        c2.note = "stage-2 relation does not hold for this block (residual " + std::to_string(c2.relation_residual) + ")";
    ch.factor2 = c2.tau_after(0, 0);
    ch.breadth = static_cast<int>(h1 * c2.hopf.get_si());
    ch.certificates.push_back(std::move(c2));
    return ch;
}

}  // namespace fg
