#include <numbers>
#include <random>

#include <doctest.h>

#include "fg/theta.hpp"

using namespace fg;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0, 1);

CMatrix random_siegel(std::mt19937_64& rng, int g) {
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::MatrixXd X(g, g), Y(g, g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) X(i, j) = u(rng), Y(i, j) = 0.4 * u(rng);
    Eigen::MatrixXd Im = Y * Y.transpose() + 0.6 * Eigen::MatrixXd::Identity(g, g);
    return ((X + X.transpose()) / 2).cast<cplx>() + I * Im.cast<cplx>();
}

Eigen::VectorXcd random_v(std::mt19937_64& rng, int g) {
    std::uniform_real_distribution<double> u(-1, 1);
    Eigen::VectorXcd v(g);
    for (int i = 0; i < g; ++i) v(i) = cplx(u(rng), 0.4 * u(rng));
    return v;
}

CMatrix halphen_tau() {
    const cplx r = rho();
    CMatrix t(3, 3);
    t << 62.0 * r - 13.0, 17.0 * r + 13.0, -5.0 * r + 38.0, 17.0 * r + 13.0, 62.0 * r - 13.0, 5.0 * r - 38.0,
        -5.0 * r + 38.0, 5.0 * r - 38.0, 45.0 * r + 53.0;
    return t / 79.0;
}

double dist(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("theta evenness and quasi-periodicity on 100 seeded samples") {
    std::mt19937_64 rng(21);
    double even = 0, quasi = 0, shift = 0;
    for (int s = 0; s < 100; ++s) {
        const int g = 1 + s % 3;
        CMatrix tau = random_siegel(rng, g);
        Eigen::VectorXcd v = random_v(rng, g);
        ThetaChar z = ThetaChar::zero(g);
        cplx t = theta(v, tau, z);
        even = std::max(even, std::abs(t - theta(-v, tau, z)) / std::max(1.0, std::abs(t)));
        const int k = s % g;
        cplx f = std::exp(-I * pi * tau(k, k) - 2.0 * pi * I * v(k));
        quasi = std::max(quasi, std::abs(theta(v + tau.col(k), tau, z) - f * t) / std::max(1.0, std::abs(t)));
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(g);
        e(k) = 1;
        shift = std::max(shift, std::abs(theta(v + e, tau, z) - t) / std::max(1.0, std::abs(t)));
    }
    CHECK(even < 1e-10);
    CHECK(quasi < 1e-10);
    CHECK(shift < 1e-10);
}

TEST_CASE("Jacobi identity and theta_1 oddness") {
    for (cplx tau : {cplx(0, 1.7), cplx(0.3, 0.8), cplx(-0.45, 1.1)}) {
        auto t0 = jacobi_thetas(0, tau);
        CHECK(std::abs(t0[0]) < 1e-14);
        CHECK(std::abs(std::pow(t0[1], 4) + std::pow(t0[3], 4) - std::pow(t0[2], 4)) < 1e-12);
        auto a = jacobi_thetas(cplx(0.21, 0.1), tau), b = jacobi_thetas(cplx(-0.21, -0.1), tau);
        CHECK(std::abs(a[0] + b[0]) < 1e-13);
        // theta_1(v) = 2 q^(1/4) sin(pi v) + ...; first term check at small q
        auto c = jacobi_thetas(0.25, cplx(0, 4));
        CHECK(std::abs(c[0] - 2.0 * std::exp(I * pi * cplx(0, 4) / 4.0) * std::sin(pi * 0.25)) < 1e-5);
    }
}

TEST_CASE("characteristic reduction phase") {
    std::mt19937_64 rng(3);
    CMatrix tau = random_siegel(rng, 2);
    Eigen::VectorXcd v = random_v(rng, 2);
    ThetaChar c = ThetaChar::parse("3/2,-1/3;5/4,2");
    auto [r, phase] = c.reduced();
    for (auto& q : r.a) CHECK((q >= 0 && q < 1));
    for (auto& q : r.b) CHECK((q >= 0 && q < 1));
    CHECK(std::abs(theta(v, tau, c) - phase * theta(v, tau, r)) < 1e-12);
    CHECK_THROWS(ThetaChar::parse("1/2;1/2,0"));
    CHECK_THROWS(ThetaChar::parse("1/2"));
}

TEST_CASE("serial reference equals the parallel kernel") {
    std::mt19937_64 rng(4);
    for (int g = 1; g <= 3; ++g) {
        CMatrix tau = random_siegel(rng, g);
        Eigen::VectorXcd v = random_v(rng, g);
        ThetaChar c = ThetaChar::parse(g == 1 ? "1/2;0" : (g == 2 ? "0,1/2;1/2,0" : "0,0,1/2;1/2,0,0"));
        CHECK(theta(v, tau, c, 1e-14, Exec::serial) == theta(v, tau, c, 1e-14, Exec::parallel));
    }
}

TEST_CASE("theta rejects tau outside Siegel space") {
    CMatrix bad(2, 2);
    bad << cplx(0, 1), 0.3, 0.2, cplx(0, 1);
    CHECK_THROWS(theta(Eigen::VectorXcd::Zero(2), bad, ThetaChar::zero(2)));
    CMatrix neg(1, 1);
    neg(0, 0) = cplx(0, -1);
    CHECK_THROWS(theta(Eigen::VectorXcd::Zero(1), neg, ThetaChar::zero(1)));
}

TEST_CASE("symplectic matrices and standard form invariants") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> d(-4, 4);
    int tried = 0;
    for (int s = 0; s < 300 && tried < 60; ++s) {
        const int g = 2 + s % 2;
        IntMatrix m(2, 2 * g);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2 * g; ++j) m(i, j) = d(rng);
        StandardForm sf;
        try {
            if (hopf_number(m) == 0) continue;
            sf = standard_form(m);
        } catch (const std::exception&) {
            continue;
        }
        ++tried;
        CHECK(is_symplectic(sf.S));
        CHECK(m * sf.S == sf.standard);
        CHECK(is_standard_form(sf.standard));
        CHECK(hopf_number(sf.standard) == hopf_number(m));
        CHECK(sf.S * symplectic_inverse(sf.S) == IntMatrix::identity(2 * g));
    }
    CHECK(tried >= 20);
    IntMatrix std2{{1, 0, 0, 0}, {0, 1, -2, 0}};
    CHECK(standard_form(std2).S == IntMatrix::identity(4));
}

TEST_CASE("genus-2 relation, Hopf number and transformed tau") {
    IntMatrix m{{0, 0, 2, 1}, {1, 0, 0, 0}};
    IntMatrix T{{0, 0, 2, 1}, {1, -2, 0, 2}, {0, -1, 0, 1}, {0, 0, 1, 0}};
    CHECK(hopf_number(m) == 2);
    CHECK(is_symplectic(T));
    CHECK(m * symplectic_inverse(T) == IntMatrix{{1, 0, 0, 0}, {0, 1, -2, 0}});
    auto P = genus2_periods(1, 2, 3);
    auto c = reduce_with(P.data.tau, m, T);
    CHECK(c.relation_residual < 1e-12);
    CMatrix want(2, 2);
    want << P.tau1 / 2.0, 0.5, 0.5, -1.0 / (2.0 * (2.0 + P.tau2));
    CHECK(dist(c.tau_after, want) < 1e-9);
    // the computed standard form reaches the same normal form
    auto own = reduce(P.data.tau, m);
    CHECK(own.standard_form == IntMatrix{{1, 0, 0, 0}, {0, 1, -2, 0}});
}

TEST_CASE("genus-2 two-term theta identity fixes the plain argument convention") {
    auto r = verify_genus2_reduction(1, 2, 3, 100, 1e-15, 7);
    CHECK(r.max_residual < 1e-10);
    CHECK(r.convention == JacobiArgument::plain);
    CHECK(r.other_convention_residual > 1e-3);
}

TEST_CASE("transform_tau is undone by the conjugated inverse") {
    // [I tau] (J T)^-1 followed by T' = J T J returns to tau
    std::mt19937_64 rng(13);
    const IntMatrix J = IntMatrix::J(2);
    IntMatrix T{{0, 0, 2, 1}, {1, -2, 0, 2}, {0, -1, 0, 1}, {0, 0, 1, 0}};
    for (int s = 0; s < 10; ++s) {
        CMatrix tau = random_siegel(rng, 2);
        CMatrix t2 = transform_tau(tau, symplectic_inverse(T));
        CHECK(dist(transform_tau(t2, J * T * J), tau) < 1e-10);
    }
    // J itself acts as tau -> tau (the identity on [I tau] up to sign)
    CMatrix tau = random_siegel(rng, 2);
    CHECK(dist(transform_tau(tau, J.transpose()), tau) < 1e-12);
}

TEST_CASE("Halphen reduction chain") {
    const CMatrix tau = halphen_tau();
    IntMatrix M = halphen_relation();
    CHECK(hopf_number(M) == 5);
    auto sf = standard_form(M);
    CHECK(M * sf.S == IntMatrix{{-1, 0, 0, 0, 0, 0}, {0, 1, 0, -5, 0, 0}});
    CHECK(is_symplectic(halphen_stored_transform()));
    CHECK(halphen_alternate_relation() * halphen_stored_transform() == IntMatrix{{-1, 0, 0, 0, 0, 0}, {0, 1, 0, -5, 0, 0}});

    const cplx r = rho();
    auto computed = genus3_reduction_chain(tau, Genus3Route::computed);
    CHECK(computed.certificates[0].relation_residual < 1e-12);
    CHECK(std::abs(computed.certificates[0].tau_e - r) < 1e-12);
    CHECK(std::abs(computed.factor1 - (1.0 + r) / 5.0) < 1e-12);
    CHECK(std::abs(computed.certificates[0].tau_after(0, 1) - 0.2) < 1e-12);
    CHECK(std::abs(computed.certificates[0].tau_after(0, 2)) < 1e-12);
    CHECK(computed.breadth == 20);

    auto stored = genus3_reduction_chain(tau, Genus3Route::stored);
    CMatrix lower(2, 2);
    lower << 0.5 + r / 5.0, r / 2.0, r / 2.0, 1.5 * r + 0.5;
    CHECK(dist(stored.certificates[0].tau_after.bottomRightCorner(2, 2), lower) < 1e-12);
    CHECK(stored.certificates[1].relation_residual < 1e-12);
    CMatrix tt(2, 2);
    tt << (11.0 + r) / 20.0, -0.25, -0.25, 1.5 + r / 4.0;
    CHECK(dist(stored.certificates[1].tau_after, tt) < 1e-12);
    CHECK(std::abs(stored.factor2 - (11.0 + r) / 20.0) < 1e-12);
    CHECK(stored.breadth == 20);
    CHECK(stored.certificates[1].standard_form == IntMatrix{{1, 0, 0, 0}, {0, 1, 4, 0}});
}

TEST_CASE("reduction input validation") {
    CHECK_THROWS(hopf_number(IntMatrix{{1, 0, 0, 0}, {2, 0, 0, 0}}));
    CHECK_THROWS(hopf_number(IntMatrix{{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS(symplectic_inverse(IntMatrix{{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK_THROWS(standard_form(IntMatrix{{2, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK_THROWS(reduce_with(halphen_tau(), halphen_relation(), halphen_stored_transform()));
}

TEST_CASE("integer matrix JSON round trip") {
    IntMatrix S = halphen_stored_transform();
    CHECK(IntMatrix::from_json(nlohmann::json::parse(S.to_json().dump())) == S);
    CHECK_THROWS(IntMatrix::from_json(nlohmann::json::parse("[[1,2],[3]]")));
}
