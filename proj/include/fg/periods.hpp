// Complete elliptic integrals, branch-tracked contour quadrature and period matrices.
#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fg/curve.hpp"

namespace fg {

using CMatrix = Eigen::MatrixXcd;

enum class Exec { serial, parallel };

// Gauss-Legendre nodes and weights on [-1, 1]
struct GaussRule {
    std::vector<double> x, w;
};
const GaussRule& gauss_legendre(int n);

// K(k) = int_0^{pi/2} dt / sqrt(1 - k^2 sin^2 t) by the arithmetic-geometric mean
cplx elliptic_K(cplx k);

// w^k = lc * prod (z - r_i), all roots simple
struct NumericCurve {
    int k = 2;
    cplx lc = 1;
    std::vector<cplx> roots;

    static NumericCurve from_roots(int k, std::vector<cplx> roots, cplx lc = 1);
    // p must be a polynomial in z whose remaining symbols are bound by `at`
    static NumericCurve from_curve(const PlaneCurve& c, const std::map<std::string, cplx>& at);

    cplx p(cplx z) const;
    cplx principal_w(cplx z) const;  // principal k-th root of p(z)
    double scale() const;            // max |root|, at least 1
    double clearance() const;        // 1e-3 * scale
};

// z^z_power dz / w^w_power
struct MonomialDifferential {
    int z_power = 0;
    int w_power = 1;
    std::string str() const;
};

// Reads coefficient * dz as a monomial differential; throws for anything else.
MonomialDifferential as_monomial(const CurveDifferential& d);

struct QuadratureOptions {
    int nodes = 64;
    double tol = 1e-11;
    int max_depth = 14;
};

struct ContourResult {
    cplx value;
    double error = 0;  // order-doubling estimate
    cplx w_end;        // continued branch value at the last vertex (0 at a branch point)
};

// Integrate along the polyline, continuing w from w_start at path[0] by nearest-root
// selection. Only the last vertex may be a branch point; that segment uses z = a + t^k.
ContourResult contour_integral(const NumericCurve& c, const MonomialDifferential& d, const std::vector<cplx>& path,
                               cplx w_start, const QuadratureOptions& opt = {});

// The k values of w over z, principal root times rho^j
std::vector<cplx> fiber(const NumericCurve& c, cplx z);

// Continue w along a straight segment; throws on clearance violation or ambiguity.
cplx continue_branch(const NumericCurve& c, cplx z0, cplx w0, cplx z1);

struct ContourJob {
    MonomialDifferential diff;
    std::vector<cplx> path;
    cplx w_start;
};
std::vector<ContourResult> contour_batch(const NumericCurve& c, const std::vector<ContourJob>& jobs, Exec ex,
                                         const QuadratureOptions& opt = {});

struct PeriodResiduals {
    double symmetry = 0;    // max |tau - tau^T|
    double positivity = 0;  // smallest eigenvalue of Im tau
    double bilinear = 0;    // |x^T H b| + |x^T H c| (genus 3)
};

struct PeriodData {
    int genus = 0;
    CMatrix A, B;  // a- and b-periods
    CMatrix tau;
    std::string tau_candidate;
    PeriodResiduals residuals;
    nlohmann::json to_json() const;
};

PeriodResiduals riemann_residuals(const CMatrix& tau);

struct Genus2Periods {
    double xi[3];
    // principal-branch values of the four quotient-curve integrals
    cplx omega1, omega1p, omega2, omega2p;
    cplx tau1, tau2;              // omega_i' / omega_i
    PeriodData data;              // Omega, Omega' from the K-expressions
    CMatrix omega_contour, omegap_contour;  // the same from cycle integrals on the curve
    double pipeline_gap = 0;      // max entrywise difference between the two
    double shape_residual = 0;    // |tau - [[2t1, t1], [t1, (t1 + t2)/2]]|
    nlohmann::json to_json() const;
};

Genus2Periods genus2_periods(double xi1, double xi2, double xi3, Exec ex = Exec::parallel);

struct Genus3Periods {
    double lambda1, lambda2;
    // segment integrals from 0 to lambda1 and to i lambda2 on the sheet with w(0) < 0
    cplx I[3], J[3];  // for dz/w, dz/w^2, z dz/w^2
    Eigen::Vector3cd x, b, c;
    PeriodData data;
    double xrel_residual = 0;  // x1 = (rho^2 - 1)(I - J), x2 = -x1, x3 = ...
    double ij_ratio_residual = 0;  // |I + J (1 + 2 rho)/3|
    nlohmann::json to_json() const;
};

Genus3Periods genus3_periods(double lambda1, double lambda2, Exec ex = Exec::parallel);

cplx rho();  // exp(2 pi i / 3)

nlohmann::json complex_json(cplx z);
nlohmann::json matrix_json(const CMatrix& m);
cplx complex_from_json(const nlohmann::json& j);
CMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace fg
