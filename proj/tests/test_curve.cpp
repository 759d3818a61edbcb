#include <doctest.h>

#include "fg/curve.hpp"

using namespace fg;

namespace {

CurvePtr make(int k, const std::string& p) { return std::make_shared<const PlaneCurve>(k, parse_poly(p), "t"); }

}  // namespace

TEST_CASE("reduction modulo the curve") {
    auto c = make(2, "z^5 - 1");
    CHECK(c->reduce(parse_poly("w^2")) == parse_poly("z^5 - 1"));
    CHECK(c->reduce(parse_poly("w^3 - w*z^5")) == parse_poly("-w"));
    auto t = make(3, "z^4 + 1");
    CHECK(t->reduce(parse_poly("w^4")) == parse_poly("w*z^4 + w"));
}

TEST_CASE("derivative of w satisfies k w^(k-1) w' = p'") {
    for (int k : {2, 3}) {
        auto c = make(k, "z^4 - 3*z + 2");
        CurveFunction w(c, MultiPoly::var("w"));
        CurveFunction lhs = w.derivative() * CurveFunction(c, MultiPoly::var("w").pow(static_cast<unsigned>(k - 1)) * k);
        CHECK((lhs - CurveFunction(c, c->p.diff("z"))).is_zero());
    }
}

TEST_CASE("Leibniz rule on curve functions") {
    auto c = make(2, "z^5 - g2*z + g3");
    CurveFunction f = CurveFunction::fraction(c, parse_poly("z*w + 1"), parse_poly("z^2 + 1"));
    CurveFunction g(c, parse_poly("w*z^2 - 3"));
    CHECK(((f * g).derivative() - (f.derivative() * g + f * g.derivative())).is_zero());
}

TEST_CASE("genus and holomorphic basis") {
    CHECK(genus(*make(2, "z^5 - 1")) == 2);
    CHECK(genus(*make(2, "z^6 - 1")) == 2);
    CHECK(genus(*make(3, "z^4 - 1")) == 3);
    CHECK(holomorphic_basis(make(2, "z^5 - 1")).size() == 2);
    CHECK(holomorphic_basis(make(3, "(z^2 - 1)*(z^2 + 4)")).size() == 3);
}

TEST_CASE("curve JSON round trip") {
    PlaneCurve c(3, parse_poly("(z^2 - l1^2)*(z^2 + l2^2)"), "trigonal");
    PlaneCurve d = PlaneCurve::from_json(nlohmann::json::parse(c.to_json().dump()));
    CHECK(d.k == 3);
    CHECK(d.p == c.p);
}

TEST_CASE("exact division") {
    auto q = exact_divide(parse_poly("z^3 - g2*z"), parse_poly("z^2 - g2"), "z");
    REQUIRE(q);
    CHECK(*q == parse_poly("z"));
    CHECK_FALSE(exact_divide(parse_poly("z^3 + 1"), parse_poly("z^2"), "z"));
}
