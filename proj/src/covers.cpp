#include "fg/covers.hpp"

#include <fstream>
#include <mutex>

namespace fg {

namespace {

std::map<std::string, MultiPoly> substitutions_of(const nlohmann::json& entry) {
    std::map<std::string, MultiPoly> subs;
    if (entry.contains("substitutions"))
        for (auto& [k, v] : entry.at("substitutions").items()) subs[k] = poly_from_json(v);
    return subs;
}

MultiPoly sub_all(const MultiPoly& p, const std::map<std::string, MultiPoly>& subs) {
    return subs.empty() ? p : p.subs(subs);
}

CurveFunction fraction_json(const CurvePtr& c, const nlohmann::json& j, const std::map<std::string, MultiPoly>& subs) {
    MultiPoly num = sub_all(poly_from_json(j.at("num")), subs);
    MultiPoly den = j.contains("den") ? sub_all(poly_from_json(j.at("den")), subs) : MultiPoly(1);
    return CurveFunction::fraction(c, num, den);
}

}  // namespace

CoverMap cover_from_json(const nlohmann::json& e, const nlohmann::json& curves) {
    CoverMap c;
    c.id = e.at("id").get<std::string>();
    const auto& cj = e.at("curve").is_string() ? curves.at(e.at("curve").get<std::string>()) : e.at("curve");
    auto subs = substitutions_of(e);
    PlaneCurve pc = PlaneCurve::from_json(cj);
    pc.p = sub_all(pc.p, subs);
    if (e.contains("relations"))
        for (auto& r : e.at("relations"))
            pc.relations.push_back({r.at("var").get<std::string>(), r.at("degree").get<int>(), poly_from_json(r.at("value"))});
    c.source = std::make_shared<const PlaneCurve>(pc);
    const auto& t = e.at("target");
    c.target.G2 = sub_all(poly_from_json(t.at("G2")), subs);
    c.target.G3 = sub_all(poly_from_json(t.at("G3")), subs);
    c.target.degenerate = t.value("degenerate", false);
    c.p_map = fraction_json(c.source, e.at("p_map"), subs);
    c.pprime_map = fraction_json(c.source, e.at("pprime_map"), subs);
    const auto& pb = e.at("pullback");
    c.pullback.constant = sub_all(poly_from_json(pb.at("constant")), subs);
    MultiPoly num = sub_all(poly_from_json(pb.at("num")), subs);
    MultiPoly den = sub_all(poly_from_json(pb.at("den")), subs);
    int wp = pb.value("w_power", 0);
    if (wp >= 0) num *= MultiPoly::var("w", wp);
    else den *= MultiPoly::var("w", -wp);
    c.pullback.differential = CurveFunction::fraction(c.source, num, den);
    c.pullback.text = "(" + c.pullback.constant.str() + ")*(" + num.str() + ")/(" + den.str() + ") dz";
    if (e.contains("reported")) c.reported = e.at("reported");
    if (e.contains("radicals")) c.radicals = e.at("radicals");
    c.notes = e.value("notes", std::string());
    return c;
}

nlohmann::json CoverMap::to_json() const {
    return {{"id", id},
            {"curve", source->to_json()},
            {"target", {{"G2", target.G2.to_json()}, {"G3", target.G3.to_json()}, {"degenerate", target.degenerate}}},
            {"p_map", p_map.to_json()},
            {"pprime_map", pprime_map.to_json()},
            {"pullback", {{"constant", pullback.constant.to_json()}, {"differential", pullback.differential.to_json()}}},
            {"text", {{"p", p_map.str()}, {"pprime", pprime_map.str()}, {"G2", target.G2.str()}, {"G3", target.G3.str()},
                      {"pullback", pullback.text}}},
            {"reported", reported},
            {"notes", notes}};
}

VerifyReport verify_cover(const CoverMap& c) {
    VerifyReport r;
    const CurveFunction& P = c.p_map;
    CurveFunction lhs = c.pprime_map * c.pprime_map;
    CurveFunction rhs = (P * P * P).scaled(MultiPoly(4)) - P.scaled(c.target.G2);
    rhs = rhs - CurveFunction(c.source, c.target.G3);
    CurveFunction diff = lhs - rhs;
    r.residual = c.source->reduce(diff.num());
    r.ok = r.residual.is_zero();
    if (!r.ok) r.message = c.id + ": p'^2 - (4p^3 - G2 p - G3) does not vanish on the curve";
    if (r.ok && !c.target.degenerate && c.source->reduce(c.target.discriminant()).is_zero()) {
        r.ok = false;
        r.message = c.id + ": target discriminant vanishes but the entry is not flagged degenerate";
    }
    return r;
}

VerifyReport verify_differential(const CoverMap& c) {
    VerifyReport r;
    CurveFunction d = c.p_map.derivative() - c.pprime_map * c.pullback.differential.scaled(c.pullback.constant);
    r.residual = c.source->reduce(d.num());
    r.ok = r.residual.is_zero();
    if (!r.ok) r.message = c.id + ": dp/dz - p' * pullback does not vanish on the curve";
    return r;
}

CoverCatalog CoverCatalog::from_json(const nlohmann::json& j, bool verify) {
    CoverCatalog cat;
    cat.curves_ = j.at("curves");
    std::vector<CoverMap> covers;
    for (auto& e : j.at("covers")) covers.push_back(cover_from_json(e, cat.curves_));
    if (verify) {
        std::vector<std::string> failures(covers.size());
#pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < covers.size(); ++i) {
            auto a = verify_cover(covers[i]);
            auto b = a.ok ? verify_differential(covers[i]) : a;
            if (!a.ok) failures[i] = a.message;
            else if (!b.ok) failures[i] = b.message;
        }
        for (auto& f : failures)
            if (!f.empty()) throw std::runtime_error("catalog verification failed: " + f);
    }
    for (auto& c : covers) {
        if (cat.entries_.count(c.id)) throw std::runtime_error("duplicate catalog id " + c.id);
        cat.order_.push_back(c.id);
        cat.entries_.emplace(c.id, std::move(c));
    }
    return cat;
}

CoverCatalog CoverCatalog::load(const std::string& path, bool verify) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw std::runtime_error("corrupted catalog data in " + path + ": " + ex.what());
    }
    return from_json(j, verify);
}

const CoverMap& CoverCatalog::lookup(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::out_of_range("no catalog entry '" + id + "'");
    return it->second;
}

std::vector<std::string> CoverCatalog::ids() const { return order_; }

std::string default_catalog_path() {
    if (const char* p = std::getenv("FG_CATALOG")) return p;
    return std::string(FG_DATA_DIR) + "/covers.json";
}

const CoverCatalog& catalog() {
    static std::once_flag once;
    static CoverCatalog cat;
    std::call_once(once, [] { cat = CoverCatalog::load(default_catalog_path(), true); });
    return cat;
}

std::map<Integer, int> factor_integer(Integer n) {
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    std::map<Integer, int> f;
    if (n < 0) n = -n;
    for (Integer p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}

}  // namespace fg
