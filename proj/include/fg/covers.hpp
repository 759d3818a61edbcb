// Elliptic cover maps: exact verification, the shipped catalog and template search.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "fg/curve.hpp"

namespace fg {

struct EllipticTarget {
    MultiPoly G2, G3;
    bool degenerate = false;  // G2^3 - 27 G3^2 == 0 is allowed only when flagged
    bool equianharmonic() const { return G2.is_zero(); }
    MultiPoly discriminant() const { return G2.pow(3) - G3 * G3 * 27; }
};

// d wp / wp' = constant * differential
struct Pullback {
    MultiPoly constant;
    CurveFunction differential;  // coefficient of dz
    std::string text;
};

struct CoverMap {
    std::string id;
    CurvePtr source;
    EllipticTarget target;
    CurveFunction p_map, pprime_map;
    Pullback pullback;
    nlohmann::json reported;  // published values that differ from the verified ones
    nlohmann::json radicals;  // auxiliary symbol meanings
    std::string notes;

    nlohmann::json to_json() const;
};

struct VerifyReport {
    bool ok = false;
    MultiPoly residual;  // reduced numerator of the failing identity
    std::string message;
};

VerifyReport verify_cover(const CoverMap& c);
VerifyReport verify_differential(const CoverMap& c);

// builds a cover from a catalog record; `curves` maps curve ids to curve JSON
CoverMap cover_from_json(const nlohmann::json& entry, const nlohmann::json& curves);

class CoverCatalog {
public:
    // verify = true: every entry must pass both checks, otherwise throws naming the entry
    static CoverCatalog load(const std::string& path, bool verify = true);
    static CoverCatalog from_json(const nlohmann::json& j, bool verify = true);

    const CoverMap& lookup(const std::string& id) const;
    bool contains(const std::string& id) const { return entries_.count(id) != 0; }
    std::size_t count() const { return entries_.size(); }
    std::vector<std::string> ids() const;
    const nlohmann::json& curves() const { return curves_; }

private:
    std::map<std::string, CoverMap> entries_;
    std::vector<std::string> order_;
    nlohmann::json curves_;
};

std::string default_catalog_path();
const CoverCatalog& catalog();  // loaded and verified once

// Template search. Templates: "cubic-in-z", "linear-in-w", "rational-z".
struct SearchBounds {
    int max_degree = 4;
};

std::vector<CoverMap> search_cover(const CurvePtr& curve, const std::string& templ, const SearchBounds& bounds);

// Integer factorisation of a nonzero integer as prime -> exponent.
std::map<Integer, int> factor_integer(Integer n);

}  // namespace fg
