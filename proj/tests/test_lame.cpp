#include <doctest.h>

#include "fg/lame.hpp"

using namespace fg;

namespace {

// the factor table, with e^3 reduced through 4e^3 = g2 e + g3
const char* kTable[5][2] = {
    {"1", "z - e"},
    {"z^2 - 3*g2", "z + 3*e"},
    {"z", "z^2 - 6*z*e + 45*e^2 - 15*g2"},
    {"z^3 - 52*g2*z + 560*g3", "z^2 + 10*z*e - 7*g2 - 35*e^2"},
    {"z^2 - 27*g2", "z^3 - 15*z^2*e + (315*e^2 - 132*g2)*z + 675*e^3 + 540*g3"},
};

// prod_i f(e_i) through the resultant in e with 4e^3 - g2 e - g3
MultiPoly product_over_roots(const MultiPoly& f) {
    MultiPoly cubic = parse_poly("4*e^3 - g2*e - g3");
    const int d = f.degree("e");
    // Res_e(cubic, f) = 4^d prod_i f(e_i)
    return resultant(cubic, f, "e") / Rational(static_cast<long>(std::pow(4, d)));
}

}  // namespace

TEST_CASE("factor table for n = 1..5") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        auto r = lame_curve(n);
        CHECK(r.f_s == parse_poly(kTable[n - 1][0]));
        CHECK(r.f_i == reduce_e(parse_poly(kTable[n - 1][1])));
    }
}

TEST_CASE("expanded curve equals f_s times the product over the three roots") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        auto r = lame_curve(n);
        CHECK(r.expanded == r.f_s * product_over_roots(r.f_i));
    }
}

TEST_CASE("n = 1 band edges are the roots e_i") {
    auto r = lame_curve(1);
    CHECK(r.expanded == parse_poly("z^3 - 1/4*g2*z - 1/4*g3"));
}

TEST_CASE("expanded roots match the ansatz eigenvalues numerically") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        auto r = lame_curve(n);
        for (auto [g2, g3] : {std::pair{4.0, 1.0}, std::pair{1.5, -0.7}}) {
            auto roots = numeric_roots(r.expanded, "z", {{"g2", g2}, {"g3", g3}});
            auto edges = numeric_band_edges(n, g2, g3);
            REQUIRE(roots.size() == static_cast<std::size_t>(2 * n + 1));
            REQUIRE(edges.size() == roots.size());
            for (auto z : roots) {
                double best = 1e300;
                for (auto e : edges) best = std::min(best, std::abs(z - e));
                CHECK(best < 1e-9 * std::max(1.0, std::abs(z)));
            }
        }
    }
}

TEST_CASE("eigenfunctions annihilate the Lame operator as Laurent series") {
    const double g2 = 4, g3 = 1;
    auto es = weierstrass_roots(g2, g3);
    for (int n = 1; n <= 4; ++n) {
        for (auto& t : enumerate_types(n)) {
            if (t.empty()) continue;
            cplx e = t.kind == AnsatzKind::attached ? es[static_cast<std::size_t>(t.attached_root - 1)] : cplx(0);
            auto edges = numeric_band_edges(n, g2, g3);
            int hits = 0;
            for (auto z : edges) {
                Eigen::VectorXcd v;
                try {
                    v = eigenfunction_numeric(n, t, z, g2, g3, e);
                } catch (const std::exception&) {
                    continue;
                }
                ++hits;
                CHECK(series_residual_numeric(n, t, v, z, g2, g3, e, 2 * n + 6) < 1e-8);
            }
            CHECK(hits >= 1);
        }
    }
}

TEST_CASE("type enumeration counts 2n + 1 band edges") {
    for (int n = 1; n <= 6; ++n) {
        int dims = 0;
        for (auto& t : enumerate_types(n))
            dims += t.dim();
        CHECK(dims == 2 * n + 1);
    }
}

TEST_CASE("out-of-range n is rejected") {
    CHECK_THROWS(lame_curve(0));
    CHECK_THROWS(lame_curve(kMaxLameN + 1));
}

TEST_CASE("LaTeX output lists factors then the expanded curve") {
    auto s = lame_curve(2).latex();
    CHECK(s.find("f_s") != std::string::npos);
    CHECK(s.find("f_i") != std::string::npos);
    CHECK(s.find("f_s") < s.rfind("="));
}
