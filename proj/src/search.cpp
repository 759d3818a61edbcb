#include <cstdlib>
#include <optional>

#include "fg/covers.hpp"

namespace fg {

namespace {

const MultiPoly Z = MultiPoly::var("z");
const MultiPoly W = MultiPoly::var("w");

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    Integer a = q.get_num(), b = q.get_den();
    Integer ra = sqrt(a), rb = sqrt(b);
    if (ra * ra != a || rb * rb != b) return std::nullopt;
    return Rational(ra, rb);
}

CoverMap make_cover(const std::string& id, const CurvePtr& curve, const MultiPoly& G2, const MultiPoly& G3,
                    const CurveFunction& p, const CurveFunction& pp, const MultiPoly& constant,
                    const CurveFunction& diff, const std::string& text) {
    CoverMap c;
    c.id = id;
    c.source = curve;
    c.target.G2 = G2;
    c.target.G3 = G3;
    c.target.degenerate = curve->reduce(c.target.discriminant()).is_zero();
    c.p_map = p;
    c.pprime_map = pp;
    c.pullback.constant = constant;
    c.pullback.differential = diff;
    c.pullback.text = text;
    return c;
}

bool verified(const CoverMap& c) { return verify_cover(c).ok && verify_differential(c).ok; }

// wp = -4 z^3 + beta, wp' = gamma w z^k
std::vector<CoverMap> search_cubic(const CurvePtr& curve, int max_degree) {
    std::vector<CoverMap> out;
    if (curve->k != 2) return out;
    const MultiPoly& p = curve->p;
    const int dp = p.degree("z");
    const Rational alpha = -4;
    for (int k = -max_degree; k <= max_degree; ++k) {
        if (2 * k + dp != 9) continue;
        MultiPoly q = p;
        if (k >= 0) {
            q *= Z.pow(static_cast<unsigned>(2 * k));
        } else {
            auto d = exact_divide(p, Z.pow(static_cast<unsigned>(-2 * k)), "z");
            if (!d) continue;
            q = *d;
        }
        auto cs = q.coeffs("z");
        bool ok = true;
        for (std::size_t j = 0; j < cs.size(); ++j)
            if (j % 3 != 0 && !cs[j].is_zero()) ok = false;
        if (!ok) continue;
        MultiPoly q0 = cs[0], q1 = cs[3], q2 = cs[6], q3 = cs[9];
        if (!q3.is_constant()) continue;
        Rational g2sq = 4 * alpha * alpha * alpha / q3.constant_value();
        auto gamma = rational_sqrt(g2sq);
        if (!gamma) continue;
        MultiPoly beta = q2 * g2sq / (12 * alpha * alpha);
        MultiPoly G2 = beta * beta * 12 - q1 * g2sq / alpha;
        MultiPoly G3 = beta.pow(3) * 4 - G2 * beta - q0 * g2sq;
        MultiPoly pn = Z.pow(3) * alpha + beta;
        const MultiPoly zk = Z.pow(static_cast<unsigned>(std::abs(k)));
        CurveFunction ppn = k >= 0 ? CurveFunction(curve, W * zk * (*gamma)) : CurveFunction(curve, W * (*gamma), zk);
        // d wp / wp' = -12 z^2 / (gamma z^k w) dz
        MultiPoly constant(Rational(-12) / *gamma);
        CurveFunction diff = k >= 0 ? CurveFunction::fraction(curve, Z * Z, W * zk)
                                    : CurveFunction::fraction(curve, Z * Z * zk, W);
        auto c = make_cover("cubic-in-z/k=" + std::to_string(k), curve, G2, G3, CurveFunction(curve, pn),
                            ppn, constant, diff.simplified(),
                            constant.str() + " z^" + std::to_string(2 - k) + " dz/w");
        if (verified(c)) out.push_back(std::move(c));
    }
    return out;
}

// top-down square root of a polynomial in z; nullopt unless the top half determines a root
std::optional<MultiPoly> poly_sqrt_top(const MultiPoly& f, Rational lead_root) {
    const int d = f.degree("z");
    if (d % 2) return std::nullopt;
    const int h = d / 2;
    MultiPoly r = Z.pow(static_cast<unsigned>(h)) * lead_root;
    for (int j = h - 1; j >= 0; --j) {
        MultiPoly rem = f - r * r;
        MultiPoly c = rem.coeff("z", h + j);
        r += c * Z.pow(static_cast<unsigned>(j)) / (2 * lead_root);
    }
    return r;
}

// wp = alpha w (beta = G2 = 0 forced), wp' = R(z) with R^2 = 4 alpha^3 p - G3
std::vector<CoverMap> search_linear_w(const CurvePtr& curve, int max_degree) {
    std::vector<CoverMap> out;
    if (curve->k != 3) return out;
    const MultiPoly& p = curve->p;
    const int dp = p.degree("z");
    if (dp % 2 || dp / 2 > max_degree) return out;
    MultiPoly lc = p.coeff("z", dp);
    if (!lc.is_constant()) return out;
    for (int alpha : {1, -1}) {
        auto lr = rational_sqrt(Rational(4 * alpha * alpha * alpha) * lc.constant_value());
        if (!lr) continue;
        auto R = poly_sqrt_top(p * (4L * alpha * alpha * alpha), *lr);
        if (!R) continue;
        MultiPoly rest = *R * *R - p * (4L * alpha * alpha * alpha);
        if (rest.depends_on("z")) continue;
        MultiPoly G3 = -rest;
        // d wp / wp' = alpha (p'/(3 w^2)) / R dz
        MultiPoly dp_z = p.diff("z");
        auto q = exact_divide(dp_z, *R, "z");
        CurveFunction diff = q ? CurveFunction::fraction(curve, *q, W * W)
                               : CurveFunction::fraction(curve, dp_z, W * W * *R);
        MultiPoly constant = MultiPoly(Rational(alpha) / 3);
        auto c = make_cover("linear-in-w/alpha=" + std::to_string(alpha), curve, MultiPoly(), G3,
                            CurveFunction(curve, W * alpha), CurveFunction(curve, *R), constant, diff,
                            constant.str() + " * (" + diff.str() + ") dz");
        if (verified(c)) out.push_back(std::move(c));
    }
    return out;
}

// Solve leftover coefficient equations for the symbols G2, G3.
std::optional<std::pair<MultiPoly, MultiPoly>> solve_targets(std::vector<MultiPoly> eqs, const PlaneCurve& curve) {
    MultiPoly G2 = MultiPoly::var("G2"), G3 = MultiPoly::var("G3");
    auto settle = [&](const std::string& v, MultiPoly& slot) {
        for (auto& e : eqs) {
            if (e.degree(v) != 1) continue;
            MultiPoly a = e.coeff(v, 1);
            if (!a.is_constant()) continue;
            MultiPoly val = -e.coeff(v, 0) / a.constant_value();
            for (auto& f : eqs) f = curve.reduce(f.subs(v, val));
            slot = slot.subs(v, val);
            return true;
        }
        return false;
    };
    settle("G3", G3);
    if (!settle("G2", G2)) {
        bool uses = false;
        for (auto& e : eqs) uses = uses || e.depends_on("G2");
        if (uses) {
            for (auto& f : eqs) f = f.subs("G2", MultiPoly());
            G2 = G2.subs("G2", MultiPoly());
        }
        settle("G3", G3);
    }
    G3 = G3.subs("G2", G2);
    for (auto& e : eqs)
        if (!e.is_zero()) return std::nullopt;
    if (G2.depends_on("G2") || G2.depends_on("G3") || G3.depends_on("G2") || G3.depends_on("G3")) return std::nullopt;
    return std::make_pair(G2, G3);
}

// wp = A(z)/z^M with d wp / wp' = z^i dz/w, hyperelliptic source
std::vector<CoverMap> search_rational(const CurvePtr& curve, int max_degree) {
    std::vector<CoverMap> out;
    if (curve->k != 2) return out;
    const MultiPoly& p = curve->p;
    const int dp = p.degree("z");
    MultiPoly lcp = p.coeff("z", dp);
    if (!lcp.is_constant()) return out;
    const Rational lc = lcp.constant_value();
    const MultiPoly G2s = MultiPoly::var("G2"), G3s = MultiPoly::var("G3");
    for (int i = 0; 2 * i < dp; ++i) {
        const int N = dp - 2 - 2 * i;
        if (N <= 0) continue;
        const Rational aN = Rational(N * N) * lc / 4;
        for (int M = 0; M <= max_degree; ++M) {
            const int top = N + M;
            std::vector<MultiPoly> b(static_cast<std::size_t>(top + 1));
            b[static_cast<std::size_t>(top)] = MultiPoly(aN);
            auto poly_A = [&] {
                MultiPoly A;
                for (int j = 0; j <= top; ++j)
                    if (!b[static_cast<std::size_t>(j)].is_zero()) A += b[static_cast<std::size_t>(j)] * Z.pow(static_cast<unsigned>(j));
                return A;
            };
            // G = (A' z - M A)^2 p z^M - z^{2i+2} (4 A^3 - G2 A z^{2M} - G3 z^{3M})
            auto G_of = [&](const MultiPoly& A) {
                MultiPoly D = A.diff("z") * Z - A * static_cast<long>(M);
                MultiPoly lhs = D * D * p * Z.pow(static_cast<unsigned>(M));
                MultiPoly rhs = A.pow(3) * 4 - G2s * A * Z.pow(static_cast<unsigned>(2 * M)) - G3s * Z.pow(static_cast<unsigned>(3 * M));
                return curve->reduce(lhs - rhs * Z.pow(static_cast<unsigned>(2 * i + 2)));
            };
            const int gtop = 3 * top + 2 * i + 2;
            for (int m = 1; m <= top; ++m) {
                MultiPoly c = G_of(poly_A()).coeff("z", gtop - m);
                Rational pivot = -aN * lc * N * (N + 2 * m);
                b[static_cast<std::size_t>(top - m)] = -c / pivot;
            }
            MultiPoly A = poly_A();
            if (M > 0 && b[0].is_zero()) continue;
            MultiPoly G = G_of(A);
            std::vector<MultiPoly> eqs;
            for (int e = 0; e <= G.degree("z"); ++e) {
                MultiPoly c = G.coeff("z", e);
                if (!c.is_zero()) eqs.push_back(c);
            }
            auto sol = solve_targets(eqs, *curve);
            if (!sol) continue;
            MultiPoly den = Z.pow(static_cast<unsigned>(M));
            CurveFunction pm = CurveFunction::fraction(curve, A, den).simplified();
            MultiPoly Dn = A.diff("z") * Z - A * static_cast<long>(M);
            CurveFunction ppm = CurveFunction::fraction(curve, W * Dn, Z.pow(static_cast<unsigned>(M + 1 + i))).simplified();
            CurveFunction diff = CurveFunction::fraction(curve, Z.pow(static_cast<unsigned>(i)), W);
            auto c = make_cover("rational-z/i=" + std::to_string(i) + ",M=" + std::to_string(M), curve, sol->first,
                                sol->second, pm, ppm, MultiPoly(1), diff, "z^" + std::to_string(i) + " dz/w");
            if (verified(c)) out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace

std::vector<CoverMap> search_cover(const CurvePtr& curve, const std::string& templ, const SearchBounds& bounds) {
    if (bounds.max_degree < 0) throw std::invalid_argument("max degree must be non-negative");
    if (templ == "cubic-in-z") return search_cubic(curve, bounds.max_degree);
    if (templ == "linear-in-w") return search_linear_w(curve, bounds.max_degree);
    if (templ == "rational-z") return search_rational(curve, bounds.max_degree);
    throw std::invalid_argument("unknown template '" + templ + "' (cubic-in-z, linear-in-w, rational-z)");
}

}  // namespace fg
