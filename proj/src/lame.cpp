#include "fg/lame.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace fg {

namespace {

const MultiPoly& Pv() {
    static const MultiPoly p = MultiPoly::var("P");
    return p;
}

MultiPoly g2v() { return MultiPoly::var("g2"); }
MultiPoly g3v() { return MultiPoly::var("g3"); }
MultiPoly ev() { return MultiPoly::var("e"); }

// D^2 Q / Q and D(Q) P' / Q for the type's prefactor, as polynomials in P
std::pair<MultiPoly, MultiPoly> prefactor_pieces(const AnsatzType& t) {
    const MultiPoly& P = Pv();
    const MultiPoly e = ev(), g2 = g2v();
    if (!t.odd && t.kind == AnsatzKind::symmetric) return {MultiPoly(), MultiPoly()};
    if (!t.odd) return {P * 6 - e * 3, (P - e) * (P * 2 + e) * 2};
    if (t.kind == AnsatzKind::attached)
        return {P * 2 + e, (P * P + e * P + e * e - g2 / Rational(4)) * 2};
    return {P * 12, P * P * 6 - g2 / Rational(2)};
}

// Q^2 as a polynomial in P
MultiPoly prefactor_square(const AnsatzType& t) {
    const MultiPoly& P = Pv();
    const MultiPoly e = ev(), g2 = g2v(), g3 = g3v();
    if (!t.odd && t.kind == AnsatzKind::symmetric) return MultiPoly(1);
    if (!t.odd) return P * P + e * P + e * e - g2 / Rational(4);
    if (t.kind == AnsatzKind::attached) return P - e;
    return P.pow(3) - g2 * P / Rational(4) - g3 / Rational(4);
}

int prefactor_order(const AnsatzType& t) {
    return t.prefactor[0] + t.prefactor[1] + t.prefactor[2];
}

}  // namespace

std::string AnsatzType::prefactor_str() const {
    std::string s;
    for (int i = 0; i < 3; ++i)
        if (prefactor[static_cast<std::size_t>(i)]) s += "s" + std::to_string(i + 1);
    return s.empty() ? "1" : s;
}

std::string AnsatzType::name() const {
    std::string s = odd ? "odd-" : "even-";
    s += kind == AnsatzKind::symmetric ? "symmetric" : "attached-" + std::to_string(attached_root);
    return s;
}

std::vector<AnsatzType> enumerate_types(int n) {
    if (n <= 0) throw std::invalid_argument("n must be positive");
    std::vector<AnsatzType> out;
    const bool odd = n % 2 == 1;
    AnsatzType sym;
    sym.odd = odd;
    sym.kind = AnsatzKind::symmetric;
    if (odd) {
        sym.prefactor = {1, 1, 1};
        sym.poly_degree = (n - 3) / 2;
        if (n == 1) sym.poly_degree = -1;
    } else {
        sym.poly_degree = n / 2;
    }
    out.push_back(sym);
    for (int i = 1; i <= 3; ++i) {
        AnsatzType a;
        a.odd = odd;
        a.kind = AnsatzKind::attached;
        a.attached_root = i;
        for (int j = 1; j <= 3; ++j) a.prefactor[static_cast<std::size_t>(j - 1)] = odd ? (j == i) : (j != i);
        a.poly_degree = odd ? (n - 1) / 2 : n / 2 - 1;
        out.push_back(a);
    }
    return out;
}

PolyMatrix operator_matrix(int n, const AnsatzType& t) {
    if (t.empty()) throw std::invalid_argument("operator matrix of an empty ansatz type");
    const MultiPoly& P = Pv();
    const MultiPoly g2 = g2v(), g3 = g3v();
    const auto [d2q, dqp] = prefactor_pieces(t);
    const MultiPoly pp2 = P.pow(3) * 4 - g2 * P - g3;
    const MultiPoly ppp = P * P * 6 - g2 / Rational(2);
    const long nn = static_cast<long>(n) * (n + 1);
    const int d = t.poly_degree;
    PolyMatrix M(d + 1, d + 1);
    for (int r = 0; r <= d; ++r) {
        MultiPoly img = d2q * P.pow(static_cast<unsigned>(r)) - P.pow(static_cast<unsigned>(r + 1)) * nn;
        if (r >= 1) {
            MultiPoly pr1 = P.pow(static_cast<unsigned>(r - 1));
            img += pr1 * dqp * (2L * r) + pr1 * ppp * static_cast<long>(r);
        }
        if (r >= 2) img += P.pow(static_cast<unsigned>(r - 2)) * pp2 * (static_cast<long>(r) * (r - 1));
        img = reduce_e(img);
        if (img.degree("P") > d) throw std::logic_error("ansatz image leaves the finite basis: " + img.str());
        for (int i = 0; i <= d; ++i) M(i, r) = img.coeff("P", i);
    }
    return M;
}

nlohmann::json SpectralCurveResult::to_json() const {
    return {{"n", n},
            {"f_s", f_s.to_json()},
            {"f_i", f_i.to_json()},
            {"expanded", expanded.to_json()},
            {"normalization", fg::to_string(normalization)},
            {"text", {{"f_s", f_s.str()}, {"f_i", f_i.str()}, {"expanded", expanded.str()}}}};
}

std::string SpectralCurveResult::latex() const {
    std::string s;
    s += "n = " + std::to_string(n) + "\n";
    s += "f_s = " + f_s.latex() + "\n";
    s += "f_i = " + f_i.latex() + "\n";
    s += "w^2 = " + expanded.latex() + "\n";
    return s;
}

SpectralCurveResult lame_curve(int n, int max_n) {
    if (n < 1 || n > max_n) throw std::invalid_argument("n out of range [1, " + std::to_string(max_n) + "]");
    SpectralCurveResult res;
    res.n = n;
    auto types = enumerate_types(n);
    res.f_s = types[0].empty() ? MultiPoly(1) : charpoly(operator_matrix(n, types[0]), "z");
    res.f_i = reduce_e(charpoly(operator_matrix(n, types[1]), "z"));
    if (res.f_s.depends_on("e")) throw std::logic_error("symmetric factor depends on e");
    MultiPoly prod(1);
    for (const char* r : {"e1", "e2", "e3"}) prod *= res.f_i.subs("e", MultiPoly::var(r));
    MultiPoly sym = express_symmetric(prod, {"e1", "e2", "e3"},
                                      {MultiPoly(), -g2v() / Rational(4), g3v() / Rational(4)});
    res.expanded = res.f_s * sym;
    res.normalization = res.expanded.coeff("z", res.expanded.degree("z")).constant_value();
    return res;
}

// ---------------------------------------------------------------- numerics

std::vector<cplx> numeric_roots(const MultiPoly& p, const std::string& var, const std::map<std::string, cplx>& at) {
    auto cs = p.coeffs(var);
    std::vector<cplx> a;
    for (auto& c : cs) a.push_back(c.is_zero() ? cplx(0) : c.eval(at));
    while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 1) return {};
    Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -a[static_cast<std::size_t>(i)] / a.back();
    // diagonal balancing
    for (int sweep = 0; sweep < 20; ++sweep) {
        bool done = true;
        for (int i = 0; i < d; ++i) {
            double c = 0, r = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) {
                    c += std::abs(C(j, i));
                    r += std::abs(C(i, j));
                }
            if (c == 0 || r == 0) continue;
            double f = std::sqrt(r / c);
            if (f < 0.5 || f > 2.0) {
                done = false;
                C.col(i) *= f;
                C.row(i) /= f;
            }
        }
        if (done) break;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C, false);
    std::vector<cplx> roots(es.eigenvalues().data(), es.eigenvalues().data() + d);
    for (auto& z : roots) {
        for (int it = 0; it < 8; ++it) {
            cplx f = 0, df = 0;
            for (int k = d; k >= 0; --k) {
                df = df * z + f;
                f = f * z + a[static_cast<std::size_t>(k)];
            }
            if (std::abs(df) == 0.0) break;
            cplx step = f / df;
            if (!std::isfinite(std::abs(step)) || std::abs(step) > 1e-3 * (1 + std::abs(z))) break;
            z -= step;
            if (std::abs(step) < 1e-17 * (1 + std::abs(z))) break;
        }
    }
    return roots;
}

std::array<cplx, 3> weierstrass_roots(double g2, double g3) {
    auto r = numeric_roots(parse_poly("4*t^3 - g2*t - g3"), "t", {{"g2", g2}, {"g3", g3}});
    std::sort(r.begin(), r.end(), [](cplx a, cplx b) { return a.real() > b.real(); });
    return {r[0], r[1], r[2]};
}

namespace {

Eigen::MatrixXcd numeric_matrix(const PolyMatrix& M, double g2, double g3, cplx e) {
    Eigen::MatrixXcd A(M.rows, M.cols);
    std::map<std::string, cplx> at{{"g2", g2}, {"g3", g3}, {"e", e}};
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) A(i, j) = M(i, j).is_zero() ? cplx(0) : M(i, j).eval(at);
    return A;
}

}  // namespace

std::vector<cplx> numeric_band_edges(int n, double g2, double g3) {
    auto roots = weierstrass_roots(g2, g3);
    std::vector<cplx> out;
    for (auto& t : enumerate_types(n)) {
        if (t.empty()) continue;
        PolyMatrix M = operator_matrix(n, t);
        cplx e = t.kind == AnsatzKind::attached ? roots[static_cast<std::size_t>(t.attached_root - 1)] : cplx(0);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(numeric_matrix(M, g2, g3, e), false);
        for (int i = 0; i < M.rows; ++i) out.push_back(es.eigenvalues()(i));
    }
    return out;
}

std::vector<MultiPoly> eigenfunction_exact(int n, const AnsatzType& t, const Relation& root_rel) {
    PolyMatrix M = operator_matrix(n, t);
    const MultiPoly z = MultiPoly::var(root_rel.var);
    PolyMatrix A(M.rows, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) A(i, j) = (i == j ? z : MultiPoly()) - M(i, j);
    std::vector<Relation> rels{root_rel, weierstrass_relation()};
    if (!reduce(determinant(A), rels).is_zero()) throw std::invalid_argument("z* is not a root of the ansatz factor");
    for (int col = M.cols - 1; col >= 0; --col) {
        auto v = adjugate_column(A, col);
        bool nonzero = false;
        for (auto& x : v) {
            x = reduce(x, rels);
            nonzero = nonzero || !x.is_zero();
        }
        if (nonzero) return v;
    }
    throw std::logic_error("adjugate vanishes identically; eigenspace has dimension > 1");
}

Eigen::VectorXcd eigenfunction_numeric(int n, const AnsatzType& t, cplx z_star, double g2, double g3, cplx e_value,
                                       double tol) {
    PolyMatrix M = operator_matrix(n, t);
    Eigen::MatrixXcd A = z_star * Eigen::MatrixXcd::Identity(M.rows, M.cols) - numeric_matrix(M, g2, g3, e_value);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
    double smin = svd.singularValues()(M.rows - 1);
    double scale = std::max(1.0, svd.singularValues()(0));
    if (smin > tol * scale) throw std::invalid_argument("z* is not an eigenvalue (smallest singular value " + std::to_string(smin) + ")");
    Eigen::VectorXcd v = svd.matrixV().col(M.rows - 1);
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
        if (std::abs(v(i)) > 1e-12) return v / v(i);
    return v;
}

// ---------------------------------------------------------------- Laurent series

namespace {

// exponents val .. val + c.size() - 1 are known
template <class T>
struct Laurent {
    int val = 0;
    std::vector<T> c;
    int prec() const { return val + static_cast<int>(c.size()); }
    T at(int k) const { return (k < val || k >= prec()) ? T() : c[static_cast<std::size_t>(k - val)]; }
};

template <class T>
Laurent<T>& trim(Laurent<T>& a) {
    std::size_t k = 0;
    while (k < a.c.size() && a.c[k] == T()) ++k;
    a.c.erase(a.c.begin(), a.c.begin() + static_cast<std::ptrdiff_t>(k));
    a.val += static_cast<int>(k);
    return a;
}

template <class T, class R>
Laurent<T> mul(const Laurent<T>& a, const Laurent<T>& b, const R& red) {
    Laurent<T> r;
    r.val = a.val + b.val;
    int prec = std::min(a.val + b.prec(), b.val + a.prec());
    r.c.assign(static_cast<std::size_t>(std::max(prec - r.val, 0)), T());
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; i + j < r.c.size() && j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    for (auto& x : r.c) x = red(x);
    return trim(r);
}

template <class T>
Laurent<T> add(const Laurent<T>& a, const Laurent<T>& b, const T& sb = T(1)) {
    Laurent<T> r;
    r.val = std::min(a.val, b.val);
    int prec = std::min(a.prec(), b.prec());
    for (int k = r.val; k < prec; ++k) r.c.push_back(a.at(k) + b.at(k) * sb);
    return trim(r);
}

template <class T>
Laurent<T> scale(const Laurent<T>& a, const T& s) {
    Laurent<T> r = a;
    for (auto& x : r.c) x = x * s;
    return r;
}

template <class T>
Laurent<T> second_derivative(const Laurent<T>& a) {
    Laurent<T> r;
    r.val = a.val - 2;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        long k = a.val + static_cast<long>(i);
        r.c.push_back(a.c[i] * T(k * (k - 1)));
    }
    return r;
}

template <class T>
Laurent<T> constant_series(const T& x, int prec) {
    Laurent<T> r;
    r.val = 0;
    r.c.assign(static_cast<std::size_t>(std::max(prec, 0)), T());
    if (!r.c.empty()) r.c[0] = x;
    return r;
}

MultiPoly half(const MultiPoly& x) { return x / Rational(2); }
cplx half(const cplx& x) { return 0.5 * x; }

// square root of xi^{-2m} (1 + ...), leading coefficient 1
template <class T, class R>
Laurent<T> sqrt_series(const Laurent<T>& s, int m, const R& red) {
    if (s.val != -2 * m || !(s.c[0] == T(1))) throw std::logic_error("prefactor square has unexpected leading term");
    const std::size_t N = s.c.size();
    std::vector<T> r(N);
    r[0] = T(1);
    for (std::size_t k = 1; k < N; ++k) {
        T acc = s.c[k];
        for (std::size_t j = 1; j < k; ++j) acc = acc - r[j] * r[k - j];
        r[k] = red(half(acc));
    }
    Laurent<T> q;
    q.val = -m;
    q.c = std::move(r);
    return q;
}

// P as a series with symbolic or numeric Laurent coefficients
template <class T>
Laurent<T> wp_series(const std::vector<T>& ck, int prec) {
    Laurent<T> p;
    p.val = -2;
    p.c.assign(static_cast<std::size_t>(prec + 2), T());
    p.c[0] = T(1);
    for (std::size_t k = 2; k < ck.size(); ++k) {
        int ex = 2 * static_cast<int>(k) - 2;
        if (ex < prec) p.c[static_cast<std::size_t>(ex + 2)] = ck[k];
    }
    return p;
}

template <class T, class R>
Laurent<T> poly_in_P(const MultiPoly& q, const Laurent<T>& P, const std::function<T(const MultiPoly&)>& coef,
                     const R& red, int prec) {
    auto cs = q.coeffs("P");
    Laurent<T> acc = constant_series(T(), prec);
    for (std::size_t k = cs.size(); k-- > 0;) {
        acc = mul(acc, P, red);
        acc = add(acc, constant_series(coef(cs[k]), prec));
    }
    return acc;
}

template <class T, class R>
Laurent<T> residual_series(int n, const AnsatzType& t, const std::vector<T>& coeffs, const T& z_star,
                           const std::vector<T>& ck, const std::function<T(const MultiPoly&)>& coef, const R& red,
                           int order) {
    const int m = prefactor_order(t);
    const int d = t.poly_degree;
    const int prec = order + 2 * m + 4 * d + 12;
    Laurent<T> P = wp_series(ck, prec);
    Laurent<T> Q = sqrt_series(poly_in_P<T>(prefactor_square(t), P, coef, red, prec), m, red);
    Laurent<T> poly = constant_series(T(), prec);
    for (int r = d; r >= 0; --r) {
        poly = mul(poly, P, red);
        poly = add(poly, constant_series(coeffs[static_cast<std::size_t>(r)], prec));
    }
    Laurent<T> w = mul(Q, poly, red);
    Laurent<T> res = second_derivative(w);
    res = add(res, mul(P, w, red), T(-static_cast<long>(n) * (n + 1)));
    res = add(res, scale(w, z_star), T(-1));
    if (res.prec() <= order) throw std::logic_error("series precision too small for the requested order");
    for (auto& x : res.c) x = red(x);
    return res;
}

}  // namespace

std::vector<MultiPoly> wp_laurent_coefficients(int kmax) {
    std::vector<MultiPoly> c(static_cast<std::size_t>(std::max(kmax + 1, 4)));
    c[2] = g2v() / Rational(20);
    c[3] = g3v() / Rational(28);
    for (int k = 4; k <= kmax; ++k) {
        MultiPoly s;
        for (int m = 2; m <= k - 2; ++m) s += c[static_cast<std::size_t>(m)] * c[static_cast<std::size_t>(k - m)];
        c[static_cast<std::size_t>(k)] = s * Rational(3) / Rational((2 * k + 1) * (k - 3));
    }
    c.resize(static_cast<std::size_t>(kmax + 1));
    return c;
}

MultiPoly series_residual_exact(int n, const AnsatzType& t, const std::vector<MultiPoly>& coeffs, const MultiPoly& z_star,
                                const std::vector<Relation>& rels, int order) {
    if (order < 2 * n + 4) throw std::invalid_argument("order too small (need >= 2n+4)");
    if (static_cast<int>(coeffs.size()) != t.dim()) throw std::invalid_argument("coefficient vector has wrong length");
    std::vector<Relation> all = rels;
    all.push_back(weierstrass_relation());
    auto red = [&](const MultiPoly& x) { return reduce(x, all); };
    std::function<MultiPoly(const MultiPoly&)> coef = [](const MultiPoly& x) { return x; };
    auto ck = wp_laurent_coefficients(order + 16);
    auto res = residual_series<MultiPoly>(n, t, coeffs, z_star, ck, coef, red, order);
    for (int k = res.val; k <= order; ++k)
        if (!res.at(k).is_zero()) return res.at(k);
    return {};
}

double series_residual_numeric(int n, const AnsatzType& t, const Eigen::VectorXcd& coeffs, cplx z_star, double g2,
                               double g3, cplx e_value, int order) {
    if (order < 2 * n + 4) throw std::invalid_argument("order too small (need >= 2n+4)");
    std::map<std::string, cplx> at{{"g2", g2}, {"g3", g3}, {"e", e_value}};
    auto cks = wp_laurent_coefficients(order + 16);
    std::vector<cplx> ck;
    for (auto& c : cks) ck.push_back(c.is_zero() ? cplx(0) : c.eval(at));
    std::vector<cplx> cv(coeffs.data(), coeffs.data() + coeffs.size());
    std::function<cplx(const MultiPoly&)> coef = [&](const MultiPoly& x) { return x.is_zero() ? cplx(0) : x.eval(at); };
    auto red = [](const cplx& x) { return x; };
    auto res = residual_series<cplx>(n, t, cv, z_star, ck, coef, red, order);
    double mx = 0;
    for (int k = res.val; k <= order; ++k) mx = std::max(mx, std::abs(res.at(k)));
    return mx;
}

}  // namespace fg
