#include <cmath>
#include <numbers>

#include "fg/periods.hpp"

namespace fg {

namespace {

const cplx I1{0, 1};

struct Candidate {
    std::string name;
    CMatrix tau;
};

std::pair<std::string, CMatrix> select_tau(const std::vector<Candidate>& cands) {
    for (const auto& c : cands) {
        if (!c.tau.allFinite()) continue;
        auto r = riemann_residuals(c.tau);
        if (r.symmetry <= 1e-9 * std::max(1.0, c.tau.cwiseAbs().maxCoeff()) && r.positivity > 0) return {c.name, c.tau};
    }
    throw std::runtime_error("no symmetric candidate tau with positive definite imaginary part");
}

// 0 -> endpoint segment integrals on the real cube-root sheet
enum Ends { kL1, kML1, kIL2, kMIL2 };

}  // namespace

cplx rho() { return std::polar(1.0, 2 * std::numbers::pi / 3); }

PeriodResiduals riemann_residuals(const CMatrix& tau) {
    PeriodResiduals r;
    r.symmetry = (tau - tau.transpose()).cwiseAbs().maxCoeff();
    Eigen::MatrixXd im = tau.imag();
    im = (im + im.transpose()) / 2;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(im);
    r.positivity = es.eigenvalues().minCoeff();
    return r;
}

nlohmann::json complex_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json matrix_json(const CMatrix& m) {
    auto out = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        auto row = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_json(m(i, j)));
        out.push_back(row);
    }
    return out;
}

cplx complex_from_json(const nlohmann::json& j) {
    if (j.is_number()) return {j.get<double>(), 0};
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

CMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a non-empty array of rows");
    const auto n = static_cast<Eigen::Index>(j.size());
    const auto m = static_cast<Eigen::Index>(j[0].size());
    CMatrix out(n, m);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (static_cast<Eigen::Index>(j[static_cast<std::size_t>(i)].size()) != m)
            throw std::invalid_argument("ragged matrix");
        for (Eigen::Index k = 0; k < m; ++k)
            out(i, k) = complex_from_json(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    }
    return out;
}

nlohmann::json PeriodData::to_json() const {
    return {{"genus", genus},
            {"A_periods", matrix_json(A)},
            {"B_periods", matrix_json(B)},
            {"tau", matrix_json(tau)},
            {"tau_candidate", tau_candidate},
            {"residuals",
             {{"symmetry", residuals.symmetry}, {"positivity", residuals.positivity}, {"bilinear", residuals.bilinear}}}};
}

nlohmann::json Genus2Periods::to_json() const {
    return {{"xi", {xi[0], xi[1], xi[2]}},
            {"omega1", complex_json(omega1)},
            {"omega1p", complex_json(omega1p)},
            {"omega2", complex_json(omega2)},
            {"omega2p", complex_json(omega2p)},
            {"tau1", complex_json(tau1)},
            {"tau2", complex_json(tau2)},
            {"periods", data.to_json()},
            {"Omega_contour", matrix_json(omega_contour)},
            {"Omegap_contour", matrix_json(omegap_contour)},
            {"pipeline_gap", pipeline_gap},
            {"shape_residual", shape_residual}};
}

Genus2Periods genus2_periods(double xi1, double xi2, double xi3, Exec ex) {
    if (!(0 < xi1 && xi1 < xi2 && xi2 < xi3)) throw std::invalid_argument("need 0 < xi1 < xi2 < xi3");
    Genus2Periods g;
    g.xi[0] = xi1;
    g.xi[1] = xi2;
    g.xi[2] = xi3;
    const double a = xi1 * xi1, b = xi2 * xi2, c = xi3 * xi3;
    auto K = [](double k2) { return elliptic_K(std::sqrt(cplx(k2))); };
    // principal square-root branch on each interval
    g.omega1 = -2.0 * I1 / std::sqrt(c - a) * K((c - b) / (c - a));
    g.omega1p = 2.0 / std::sqrt(c - a) * K((b - a) / (c - a));
    g.omega2 = -2.0 * I1 / std::sqrt((c - a) * b) * K((c - b) * a / ((c - a) * b));
    g.omega2p = 2.0 / std::sqrt((c - a) * b) * K((b - a) * c / ((c - a) * b));
    g.tau1 = g.omega1p / g.omega1;
    g.tau2 = g.omega2p / g.omega2;

    CMatrix Om(2, 2), Omp(2, 2);
    Om << -g.omega2 / 2.0, g.omega2, g.omega1 / 2.0, 0.0;
    Omp << 0.0, g.omega2p / 2.0, g.omega1p, g.omega1p / 2.0;
    g.data.genus = 2;
    g.data.A = Om;
    g.data.B = Omp;
    auto [name, tau] = select_tau({{"Omega^-1 Omega'", Om.inverse() * Omp},
                                   {"Omega'^-1 Omega", Omp.inverse() * Om},
                                   {"(Omega^T)^-1 Omega'^T", Om.transpose().inverse() * Omp.transpose()},
                                   {"(Omega'^T)^-1 Omega^T", Omp.transpose().inverse() * Om.transpose()}});
    g.data.tau = tau;
    g.data.tau_candidate = name;
    g.data.residuals = riemann_residuals(tau);
    CMatrix shape(2, 2);
    shape << 2.0 * g.tau1, g.tau1, g.tau1, (g.tau1 + g.tau2) / 2.0;
    g.shape_residual = (tau - shape).cwiseAbs().maxCoeff();

    // cycle integrals on w^2 = prod (z^2 - xi_i^2)
    NumericCurve curve = NumericCurve::from_roots(2, {-xi3, -xi2, -xi1, xi1, xi2, xi3});
    struct Seg {
        double from, to;
    };
    const std::vector<Seg> segs{{-xi3, -xi2}, {-xi1, xi1}, {xi1, xi2}, {-xi1, -xi2}};
    std::vector<ContourJob> jobs;
    for (const auto& s : segs) {
        const cplx mid = (s.from + s.to) / 2;
        const cplx wm = curve.principal_w(mid);
        for (int zp : {0, 1}) {
            jobs.push_back({{zp, 1}, {mid, s.to}, wm});
            jobs.push_back({{zp, 1}, {mid, s.from}, wm});
        }
    }
    auto res = contour_batch(curve, jobs, ex);
    auto S = [&](std::size_t seg, int zp) {
        std::size_t base = seg * 4 + static_cast<std::size_t>(zp) * 2;
        return res[base].value - res[base + 1].value;
    };
    // twice-traversed segments; a_1 lies on the opposite sheet
    g.omega_contour = CMatrix(2, 2);
    g.omegap_contour = CMatrix(2, 2);
    for (int zp : {0, 1}) {
        g.omega_contour(zp, 0) = -S(0, zp);
        g.omega_contour(zp, 1) = S(1, zp);
        g.omegap_contour(zp, 0) = S(2, zp) + S(3, zp);
        g.omegap_contour(zp, 1) = S(2, zp);
    }
    g.pipeline_gap = std::max((g.omega_contour - Om).cwiseAbs().maxCoeff(), (g.omegap_contour - Omp).cwiseAbs().maxCoeff());
    return g;
}

nlohmann::json Genus3Periods::to_json() const {
    auto vec = [](const Eigen::Vector3cd& v) {
        return nlohmann::json::array({complex_json(v(0)), complex_json(v(1)), complex_json(v(2))});
    };
    return {{"lambda1", lambda1},
            {"lambda2", lambda2},
            {"I", complex_json(I[0])},
            {"J", complex_json(J[0])},
            {"I_dz_w2", complex_json(I[1])},
            {"J_dz_w2", complex_json(J[1])},
            {"I_zdz_w2", complex_json(I[2])},
            {"J_zdz_w2", complex_json(J[2])},
            {"x", vec(x)},
            {"b", vec(b)},
            {"c", vec(c)},
            {"periods", data.to_json()},
            {"x_relation_residual", xrel_residual},
            {"ij_ratio_residual", ij_ratio_residual}};
}

Genus3Periods genus3_periods(double lambda1, double lambda2, Exec ex) {
    if (!(lambda1 > 0 && lambda2 > 0)) throw std::invalid_argument("lambda1 and lambda2 must be positive");
    Genus3Periods g;
    g.lambda1 = lambda1;
    g.lambda2 = lambda2;
    NumericCurve curve = NumericCurve::from_roots(3, {-lambda1, lambda1, -I1 * lambda2, I1 * lambda2});
    const cplx w0 = -std::cbrt(lambda1 * lambda1 * lambda2 * lambda2);
    const cplx ends[4] = {lambda1, -lambda1, I1 * lambda2, -I1 * lambda2};
    const MonomialDifferential diffs[3] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<ContourJob> jobs;
    for (auto e : ends)
        for (auto d : diffs) jobs.push_back({d, {0.0, e}, w0});
    auto res = contour_batch(curve, jobs, ex);
    auto base = [&](int end, int d) { return res[static_cast<std::size_t>(end * 3 + d)].value; };
    for (int d = 0; d < 3; ++d) {
        g.I[d] = base(kL1, d);
        g.J[d] = base(kIL2, d);
    }
    const cplx r = rho();
    // sheet s carries w = rho^s w_0
    auto seg = [&](int sheet, int end, int d) {
        int j = diffs[d].w_power;
        return std::pow(r, -sheet * j) * base(end, d);
    };
    struct Visit {
        int end, s_in, s_out;
    };
    const std::vector<std::vector<Visit>> cycles{
        {{kIL2, 0, 1}, {kL1, 1, 0}},
        {{kMIL2, 0, 1}, {kML1, 1, 0}},
        {{kL1, 1, 2}, {kIL2, 2, 0}, {kMIL2, 0, 2}, {kML1, 2, 1}}};
    Eigen::Vector3cd* cols[3] = {&g.x, &g.b, &g.c};
    for (int d = 0; d < 3; ++d)
        for (int k = 0; k < 3; ++k) {
            cplx t = 0;
            for (const auto& v : cycles[static_cast<std::size_t>(k)]) t += seg(v.s_in, v.end, d) - seg(v.s_out, v.end, d);
            (*cols[d])(k) = t;
        }
    const Eigen::Vector3cd H(1, 1, -1);
    CMatrix A(3, 3), B(3, 3);
    A.col(0) = g.x;
    A.col(1) = g.b;
    A.col(2) = g.c;
    B.col(0) = r * H.cwiseProduct(g.x);
    B.col(1) = r * r * H.cwiseProduct(g.b);
    B.col(2) = r * r * H.cwiseProduct(g.c);
    g.data.genus = 3;
    g.data.A = A;
    g.data.B = B;
    auto [name, tau] = select_tau({{"A B^-1", A * B.inverse()},
                                   {"B^-1 A", B.inverse() * A},
                                   {"(A^T)^-1 B^T", A.transpose().inverse() * B.transpose()},
                                   {"(B^T)^-1 A^T", B.transpose().inverse() * A.transpose()}});
    g.data.tau = tau;
    g.data.tau_candidate = name;
    g.data.residuals = riemann_residuals(tau);
    g.data.residuals.bilinear = std::abs((g.x.array() * H.array() * g.b.array()).sum()) +
                                std::abs((g.x.array() * H.array() * g.c.array()).sum());
    const cplx Iv = g.I[0], Jv = g.J[0];
    const cplx x1 = (r * r - 1.0) * (Iv - Jv);
    const cplx x3 = -2.0 * Jv + r * (Jv - Iv) + 2.0 * r * r * Iv + r * (Jv - Iv);
    g.xrel_residual = std::max({std::abs(g.x(0) - x1), std::abs(g.x(1) + x1), std::abs(g.x(2) - x3)});
    g.ij_ratio_residual = std::abs(Iv + Jv * (1.0 + 2.0 * r) / 3.0);
    return g;
}

}  // namespace fg
