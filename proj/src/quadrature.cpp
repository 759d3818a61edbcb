#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "fg/lame.hpp"
#include "fg/periods.hpp"

namespace fg {

namespace {

GaussRule compute_rule(int n) {
    GaussRule r;
    r.x.resize(static_cast<std::size_t>(n));
    r.w.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[static_cast<std::size_t>(i)] = x;
        r.w[static_cast<std::size_t>(i)] = 2 / ((1 - x * x) * dp * dp);
    }
    return r;
}

double dist_to_segment(cplx p, cplx a, cplx b) {
    cplx d = b - a;
    double len2 = std::norm(d);
    if (len2 == 0) return std::abs(p - a);
    double t = std::clamp(((p - a) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(p - (a + t * d));
}

cplx root_of_unity(int k, int j) { return std::polar(1.0, 2 * std::numbers::pi * j / k); }

struct Panel {
    cplx value;
    double error;
};

// composite Gauss-Legendre on [0, 1] with order-doubling error control
template <class F>
Panel integrate_unit(const F& f, const QuadratureOptions& opt) {
    const GaussRule& lo = gauss_legendre(opt.nodes);
    const GaussRule& hi = gauss_legendre(2 * opt.nodes);
    auto rule = [&](const GaussRule& g, double a, double b) {
        cplx s = 0;
        double h = (b - a) / 2, m = (a + b) / 2;
        for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * f(m + h * g.x[i]);
        return s * h;
    };
    Panel out{0, 0};
    std::vector<std::tuple<double, double, int>> stack{{0.0, 1.0, 0}};
    while (!stack.empty()) {
        auto [a, b, depth] = stack.back();
        stack.pop_back();
        cplx q1 = rule(lo, a, b), q2 = rule(hi, a, b);
        double err = std::abs(q2 - q1);
        if (err <= opt.tol * (b - a) * std::max(1.0, std::abs(q2)) || depth >= opt.max_depth) {
            out.value += q2;
            out.error += err;
        } else {
            double m = (a + b) / 2;
            stack.emplace_back(m, b, depth + 1);
            stack.emplace_back(a, m, depth + 1);
        }
    }
    return out;
}

cplx ipow(cplx z, int e) {
    cplx r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= z;
    return e >= 0 ? r : 1.0 / r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("Gauss-Legendre order must be positive");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

cplx elliptic_K(cplx k) {
    cplx kp2 = 1.0 - k * k;
    if (std::abs(kp2) < 1e-300) throw std::domain_error("elliptic_K diverges at k^2 = 1");
    cplx a = 1, b = std::sqrt(kp2);
    for (int i = 0; i < 64; ++i) {
        cplx an = (a + b) / 2.0;
        cplx bn = std::sqrt(a * b);
        if (std::abs(an - bn) > std::abs(an + bn)) bn = -bn;
        a = an;
        b = bn;
        if (std::abs(a - b) <= 1e-16 * std::abs(a)) break;
    }
    return std::numbers::pi / (2.0 * a);
}

NumericCurve NumericCurve::from_roots(int k, std::vector<cplx> roots, cplx lc) {
    if (k < 2) throw std::invalid_argument("curve exponent k must be at least 2");
    NumericCurve c;
    c.k = k;
    c.lc = lc;
    c.roots = std::move(roots);
    return c;
}

NumericCurve NumericCurve::from_curve(const PlaneCurve& pc, const std::map<std::string, cplx>& at) {
    const int d = pc.degree();
    cplx lc = pc.p.coeff("z", d).eval(at);
    return from_roots(pc.k, numeric_roots(pc.p, "z", at), lc);
}

cplx NumericCurve::p(cplx z) const {
    cplx v = lc;
    for (auto r : roots) v *= z - r;
    return v;
}

cplx NumericCurve::principal_w(cplx z) const {
    cplx v = p(z);
    if (v.imag() == 0) v = cplx(v.real(), 0.0);  // a signed zero would select the conjugate root
    return std::pow(v, 1.0 / k);
}

double NumericCurve::scale() const {
    double s = 1;
    for (auto r : roots) s = std::max(s, std::abs(r));
    return s;
}

double NumericCurve::clearance() const { return 1e-3 * scale(); }

std::string MonomialDifferential::str() const {
    std::string num = z_power == 0 ? "dz" : (z_power == 1 ? "z dz" : "z^" + std::to_string(z_power) + " dz");
    return num + (w_power == 0 ? "" : (w_power == 1 ? "/w" : "/w^" + std::to_string(w_power)));
}

MonomialDifferential as_monomial(const CurveDifferential& d) {
    const MultiPoly& num = d.coefficient.num();
    const MultiPoly& den = d.coefficient.den();
    const PlaneCurve& curve = *d.coefficient.curve();
    if (num.size() != 1) throw std::invalid_argument("differential is not a monomial z^a dz / w^j");
    const auto& [exp, coef] = *num.terms().begin();
    MonomialDifferential m;
    int e = 0;
    const auto& vars = num.vars();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == "z") m.z_power = exp[i];
        else if (vars[i] == "w") e = exp[i];
        else throw std::invalid_argument("differential depends on parameter " + vars[i]);
    }
    // stored as z^a w^(qk - j) / p^q
    for (int q = 0; q <= 2; ++q) {
        MultiPoly pq = curve.p.pow(static_cast<unsigned>(q));
        if (pq.size() == 0) continue;
        const auto& lead = *pq.terms().rbegin();
        auto it = den.terms().find(lead.first);
        if (den.vars() != pq.vars() || it == den.terms().end()) continue;
        Rational scale = it->second / lead.second;
        if (den != pq * scale || coef != scale) continue;
        m.w_power = q * curve.k - e;
        if (m.w_power < 0) continue;
        return m;
    }
    throw std::invalid_argument("differential is not a monomial z^a dz / w^j");
}

std::vector<cplx> fiber(const NumericCurve& c, cplx z) {
    cplx w0 = c.principal_w(z);
    std::vector<cplx> out;
    for (int j = 0; j < c.k; ++j) out.push_back(w0 * root_of_unity(c.k, j));
    return out;
}

cplx continue_branch(const NumericCurve& c, cplx z0, cplx w0, cplx z1) {
    const double clear = c.clearance();
    cplx pred = w0;
    for (auto r : c.roots) {
        if (dist_to_segment(r, z0, z1) < clear)
            throw std::domain_error("path passes within clearance of branch point");
        pred *= std::pow((z1 - r) / (z0 - r), 1.0 / c.k);
    }
    auto f = fiber(c, z1);
    std::vector<double> d;
    for (auto w : f) d.push_back(std::abs(w - pred));
    std::vector<std::size_t> idx(d.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return d[a] < d[b]; });
    if (d[idx[1]] <= 2 * d[idx[0]]) throw std::runtime_error("branch tracking ambiguity");
    return f[idx[0]];
}

ContourResult contour_integral(const NumericCurve& c, const MonomialDifferential& d, const std::vector<cplx>& path,
                               cplx w_start, const QuadratureOptions& opt) {
    if (path.size() < 2) throw std::invalid_argument("path needs at least two vertices");
    if (std::abs(std::pow(w_start, c.k) - c.p(path[0])) > 1e-9 * std::max(1.0, std::abs(c.p(path[0]))))
        throw std::invalid_argument("w_start is not on the fiber over the first vertex");
    const double clear = c.clearance();
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        for (auto r : c.roots)
            if (std::abs(path[i] - r) < clear) throw std::domain_error("interior vertex within clearance of a branch point");
    const cplx zlast = path.back();
    int end_root = -1;
    for (std::size_t i = 0; i < c.roots.size(); ++i)
        if (std::abs(zlast - c.roots[i]) < clear) end_root = static_cast<int>(i);

    ContourResult res{0, 0, 0};
    cplx w = w_start;
    const std::size_t nseg = path.size() - 1;
    for (std::size_t s = 0; s < nseg; ++s) {
        const cplx z0 = path[s], z1 = path[s + 1];
        if (s + 1 == nseg && end_root >= 0) {
            if (d.w_power >= c.k) throw std::domain_error("integrand not integrable at the branch point");
            const cplx a = c.roots[static_cast<std::size_t>(end_root)];
            for (std::size_t i = 0; i < c.roots.size(); ++i)
                if (static_cast<int>(i) != end_root && dist_to_segment(c.roots[i], z0, a) < clear)
                    throw std::domain_error("path passes within clearance of branch point");
            const cplx span = z0 - a;
            // z = a + span t^k, w = t * u(t)
            auto g = [&](double t) {
                cplx z = a + span * std::pow(t, c.k);
                cplx u = w;
                for (std::size_t i = 0; i < c.roots.size(); ++i)
                    if (static_cast<int>(i) != end_root) u *= std::pow((z - c.roots[i]) / (z0 - c.roots[i]), 1.0 / c.k);
                return ipow(z, d.z_power) * static_cast<double>(c.k) * span * std::pow(t, c.k - 1 - d.w_power) /
                       ipow(u, d.w_power);
            };
            Panel p = integrate_unit(g, opt);
            res.value -= p.value;
            res.error += p.error;
            w = 0;
        } else {
            const cplx dz = z1 - z0;
            auto g = [&](double t) {
                cplx z = z0 + dz * t;
                return ipow(z, d.z_power) * dz / ipow(continue_branch(c, z0, w, z), d.w_power);
            };
            Panel p = integrate_unit(g, opt);
            res.value += p.value;
            res.error += p.error;
            w = continue_branch(c, z0, w, z1);
        }
    }
    res.w_end = w;
    return res;
}

std::vector<ContourResult> contour_batch(const NumericCurve& c, const std::vector<ContourJob>& jobs, Exec ex,
                                         const QuadratureOptions& opt) {
    std::vector<ContourResult> out(jobs.size());
    std::vector<std::string> errors(jobs.size());
    gauss_legendre(opt.nodes);
    gauss_legendre(2 * opt.nodes);
#pragma omp parallel for schedule(dynamic) if (ex == Exec::parallel)
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        try {
            out[i] = contour_integral(c, jobs[i].diff, jobs[i].path, jobs[i].w_start, opt);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }
    for (auto& e : errors)
        if (!e.empty()) throw std::runtime_error(e);
    return out;
}

}  // namespace fg
