// Function fields of superelliptic curves w^k = p(z).
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fg/algebra.hpp"

namespace fg {

struct PlaneCurve {
    int k = 2;
    MultiPoly p;  // polynomial in z, possibly with parameters
    std::string label;
    bool singular = false;
    std::vector<Relation> relations;  // auxiliary radicals, e.g. u^3 = 5

    PlaneCurve() = default;
    PlaneCurve(int k_, MultiPoly p_, std::string label_, bool singular_ = false);

    int degree() const { return p.degree("z"); }
    // w^k -> p, auxiliary relations, then e^3 -> (g2 e + g3)/4 if e occurs
    MultiPoly reduce(const MultiPoly& f) const;

    nlohmann::json to_json() const;
    static PlaneCurve from_json(const nlohmann::json& j);
};

using CurvePtr = std::shared_ptr<const PlaneCurve>;

// Sum_j r_j(z) w^j kept over one common w-free denominator.
class CurveFunction {
public:
    CurveFunction() = default;
    CurveFunction(CurvePtr curve, const MultiPoly& num, const MultiPoly& den = MultiPoly(1));

    // den may carry a monomial factor w^j; it is moved to the numerator
    static CurveFunction fraction(CurvePtr curve, const MultiPoly& num, const MultiPoly& den);

    const CurvePtr& curve() const { return curve_; }
    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    // (numerator of r_j, common denominator), j = 0..k-1
    std::vector<std::pair<MultiPoly, MultiPoly>> components() const;

    CurveFunction derivative() const;  // d/dz with dw/dz = p'/(k w^{k-1})
    bool is_zero() const;
    CurveFunction simplified() const;  // cancels constant content and z-powers, exact division

    CurveFunction operator-() const;
    friend CurveFunction operator+(const CurveFunction& a, const CurveFunction& b);
    friend CurveFunction operator-(const CurveFunction& a, const CurveFunction& b);
    friend CurveFunction operator*(const CurveFunction& a, const CurveFunction& b);
    CurveFunction scaled(const MultiPoly& c) const;

    std::string str() const;
    nlohmann::json to_json() const;

private:
    CurvePtr curve_;
    MultiPoly num_;
    MultiPoly den_ = MultiPoly(1);
};

CurveFunction normal_form(const MultiPoly& expr, const CurvePtr& curve);
CurveFunction derivative_on_curve(const CurveFunction& f);
bool is_zero_on_curve(const CurveFunction& f);

// coefficient * dz
struct CurveDifferential {
    CurveFunction coefficient;
    std::string label;
};

std::vector<CurveDifferential> holomorphic_basis(const CurvePtr& curve);
int genus(const PlaneCurve& c);

// exact quotient a / b when b's leading z-coefficient is a rational constant and b | a
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b, const std::string& var);

}  // namespace fg
