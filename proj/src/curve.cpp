#include "fg/curve.hpp"

#include <algorithm>

namespace fg {

PlaneCurve::PlaneCurve(int k_, MultiPoly p_, std::string label_, bool singular_)
    : k(k_), p(std::move(p_)), label(std::move(label_)), singular(singular_) {
    if (k < 2) throw std::invalid_argument("curve exponent k must be >= 2");
    if (p.is_zero()) throw std::invalid_argument("curve polynomial is zero");
    if (p.depends_on("w")) throw std::invalid_argument("curve polynomial must not contain w");
}

MultiPoly PlaneCurve::reduce(const MultiPoly& f) const {
    std::vector<Relation> rels = relations;
    rels.insert(rels.begin(), Relation{"w", k, p});
    MultiPoly r = fg::reduce(f, rels);
    if (r.depends_on("e")) r = fg::reduce(r, {weierstrass_relation()});
    return r;
}

nlohmann::json PlaneCurve::to_json() const {
    nlohmann::json j = {{"k", k}, {"p", p.to_json()}, {"label", label}};
    if (singular) j["singular"] = true;
    if (!relations.empty()) {
        j["relations"] = nlohmann::json::array();
        for (auto& r : relations)
            j["relations"].push_back({{"var", r.var}, {"degree", r.degree}, {"value", r.value.to_json()}});
    }
    return j;
}

PlaneCurve PlaneCurve::from_json(const nlohmann::json& j) {
    PlaneCurve c(j.at("k").get<int>(), poly_from_json(j.at("p")), j.value("label", std::string("curve")),
                 j.value("singular", false));
    if (j.contains("relations"))
        for (auto& r : j.at("relations"))
            c.relations.push_back({r.at("var").get<std::string>(), r.at("degree").get<int>(),
                                   poly_from_json(r.at("value"))});
    return c;
}

int genus(const PlaneCurve& c) {
    if (c.singular) throw std::invalid_argument("genus of singular curve '" + c.label + "' is not tabulated");
    const int d = c.degree();
    if (c.k == 2 && d >= 3) return (d - 1) / 2;
    if (c.k == 3 && d == 4) return 3;
    throw std::invalid_argument("unsupported curve family: w^" + std::to_string(c.k) + " = degree " +
                                std::to_string(d) + " polynomial");
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b, const std::string& var) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    const int db = b.degree(var);
    MultiPoly lc = b.coeff(var, db);
    if (!lc.is_constant()) return std::nullopt;
    Rational l = lc.constant_value();
    MultiPoly r = a, q;
    while (!r.is_zero() && r.degree(var) >= db) {
        int dr = r.degree(var);
        MultiPoly t = r.coeff(var, dr) / l;
        if (dr > db) t *= MultiPoly::var(var, dr - db);
        q += t;
        r -= t * b;
    }
    if (!r.is_zero()) return std::nullopt;
    return q;
}

CurveFunction::CurveFunction(CurvePtr curve, const MultiPoly& num, const MultiPoly& den)
    : curve_(std::move(curve)), den_(den) {
    if (!curve_) throw std::invalid_argument("curve function without a curve");
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (den_.depends_on("w")) throw std::invalid_argument("denominator must not contain w");
    num_ = curve_->reduce(num);
}

CurveFunction CurveFunction::fraction(CurvePtr curve, const MultiPoly& num, const MultiPoly& den) {
    if (!den.depends_on("w")) return {std::move(curve), num, den};
    int j = den.degree("w");
    MultiPoly rest = den.coeff("w", j);
    if (rest * MultiPoly::var("w", j) != den)
        throw std::invalid_argument("denominator must be w^j times a w-free polynomial");
    // 1/w^j = w^{k-j} / p  (j < k), applied through powers of w^k
    const int k = curve->k;
    int q = (j + k - 1) / k;
    MultiPoly n = num * MultiPoly::var("w", q * k - j);
    MultiPoly d = rest * curve->p.pow(static_cast<unsigned>(q));
    return {std::move(curve), n, d};
}

std::vector<std::pair<MultiPoly, MultiPoly>> CurveFunction::components() const {
    std::vector<std::pair<MultiPoly, MultiPoly>> out;
    for (int j = 0; j < curve_->k; ++j) out.emplace_back(num_.coeff("w", j), den_);
    return out;
}

CurveFunction CurveFunction::derivative() const {
    const MultiPoly dzN = num_.diff("z"), dwN = num_.diff("w"), dD = den_.diff("z");
    if (dwN.is_zero()) return CurveFunction(curve_, dzN * den_ - num_ * dD, den_ * den_);
    const MultiPoly kp = curve_->p * MultiPoly(static_cast<long>(curve_->k));
    MultiPoly n = (kp * dzN + curve_->p.diff("z") * MultiPoly::var("w") * dwN) * den_ - kp * num_ * dD;
    return CurveFunction(curve_, n, kp * den_ * den_);
}

bool CurveFunction::is_zero() const { return curve_->reduce(num_).is_zero(); }

namespace {

int min_z_power(const MultiPoly& p) {
    const auto& v = p.vars();
    auto it = std::lower_bound(v.begin(), v.end(), std::string("z"));
    if (it == v.end() || *it != "z") return 0;
    auto i = static_cast<std::size_t>(it - v.begin());
    int m = -1;
    for (auto& [e, c] : p.terms()) m = m < 0 ? e[i] : std::min(m, e[i]);
    return std::max(m, 0);
}

MultiPoly drop_z_power(const MultiPoly& p, int m) {
    if (m == 0) return p;
    MultiPoly::TermMap t;
    const auto& v = p.vars();
    auto i = static_cast<std::size_t>(std::lower_bound(v.begin(), v.end(), std::string("z")) - v.begin());
    for (auto& [e, c] : p.terms()) {
        MultiPoly::Exp f = e;
        f[i] -= m;
        t.emplace(std::move(f), c);
    }
    return MultiPoly::from_terms(v, std::move(t));
}

}  // namespace

CurveFunction CurveFunction::simplified() const {
    if (num_.is_zero()) return CurveFunction(curve_, MultiPoly(), MultiPoly(1));
    MultiPoly n = num_, d = den_;
    int m = std::min(min_z_power(n), min_z_power(d));
    n = drop_z_power(n, m);
    d = drop_z_power(d, m);
    if (!d.is_constant()) {
        if (auto q = exact_divide(n, d, "z")) {
            n = *q;
            d = MultiPoly(1);
        }
    }
    if (d.is_constant()) {
        n /= d.constant_value();
        d = MultiPoly(1);
    }
    return CurveFunction(curve_, n, d);
}

CurveFunction CurveFunction::operator-() const { return CurveFunction(curve_, -num_, den_); }

CurveFunction operator+(const CurveFunction& a, const CurveFunction& b) {
    if (a.den_ == b.den_) return CurveFunction(a.curve_, a.num_ + b.num_, a.den_);
    return CurveFunction(a.curve_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

CurveFunction operator-(const CurveFunction& a, const CurveFunction& b) { return a + (-b); }

CurveFunction operator*(const CurveFunction& a, const CurveFunction& b) {
    return CurveFunction(a.curve_, a.num_ * b.num_, a.den_ * b.den_);
}

CurveFunction CurveFunction::scaled(const MultiPoly& c) const {
    if (c.depends_on("w")) return *this * normal_form(c, curve_);
    return CurveFunction(curve_, num_ * c, den_);
}

std::string CurveFunction::str() const {
    if (den_ == MultiPoly(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

nlohmann::json CurveFunction::to_json() const {
    nlohmann::json comps = nlohmann::json::array();
    for (auto& [n, d] : components()) comps.push_back({{"num", n.to_json()}, {"den", d.to_json()}});
    return {{"curve", curve_->label}, {"components", comps}};
}

CurveFunction normal_form(const MultiPoly& expr, const CurvePtr& curve) { return CurveFunction(curve, expr); }

CurveFunction derivative_on_curve(const CurveFunction& f) { return f.derivative(); }

bool is_zero_on_curve(const CurveFunction& f) { return f.is_zero(); }

std::vector<CurveDifferential> holomorphic_basis(const CurvePtr& curve) {
    if (curve->singular) throw std::invalid_argument("holomorphic basis refused for singular curve '" + curve->label + "'");
    const int g = genus(*curve);
    const MultiPoly z = MultiPoly::var("z"), w = MultiPoly::var("w");
    std::vector<CurveDifferential> out;
    if (curve->k == 2) {
        for (int i = 0; i < g; ++i) {
            MultiPoly zi = z.pow(static_cast<unsigned>(i));
            out.push_back({CurveFunction::fraction(curve, zi, w), i == 0 ? "dz/w" : (i == 1 ? "z dz/w" : "z^" + std::to_string(i) + " dz/w")});
        }
    } else {
        out.push_back({CurveFunction::fraction(curve, MultiPoly(1), w), "dz/w"});
        out.push_back({CurveFunction::fraction(curve, MultiPoly(1), w * w), "dz/w^2"});
        out.push_back({CurveFunction::fraction(curve, z, w * w), "z dz/w^2"});
    }
    return out;
}

}  // namespace fg
