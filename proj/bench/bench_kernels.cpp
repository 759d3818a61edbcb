// Serial reference against OpenMP kernels.
#include <benchmark/benchmark.h>

#include "fg/theta.hpp"

using namespace fg;

namespace {

CMatrix bench_tau(int g) {
    CMatrix t = CMatrix::Identity(g, g) * cplx(0, 0.7);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (i != j) t(i, j) = cplx(0.1 * (i + j), 0.05);
    return t;
}

void BM_theta(benchmark::State& st, Exec ex) {
    const int g = static_cast<int>(st.range(0));
    CMatrix tau = bench_tau(g);
    Eigen::VectorXcd v = Eigen::VectorXcd::Constant(g, cplx(0.2, 0.1));
    ThetaChar c = ThetaChar::zero(g);
    for (auto _ : st) benchmark::DoNotOptimize(theta(v, tau, c, 1e-15, ex));
}

void BM_contours(benchmark::State& st, Exec ex) {
    auto c = NumericCurve::from_roots(3, {1.0, -1.0, cplx(0, 2), cplx(0, -2)});
    std::vector<ContourJob> jobs;
    for (int i = 0; i < 24; ++i) {
        cplx a(0.05 * i, 0.3), b(2.5, 0.1 * i + 0.5);
        jobs.push_back({{i % 2, 1 + i % 2}, {a, b}, c.principal_w(a)});
    }
    for (auto _ : st) benchmark::DoNotOptimize(contour_batch(c, jobs, ex));
}

void BM_genus3_periods(benchmark::State& st, Exec ex) {
    for (auto _ : st) benchmark::DoNotOptimize(genus3_periods(std::sqrt(5.0), std::sqrt(27.0), ex));
}

}  // namespace

BENCHMARK_CAPTURE(BM_theta, serial, Exec::serial)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_theta, parallel, Exec::parallel)->Arg(2)->Arg(3)->Arg(4);
BENCHMARK_CAPTURE(BM_contours, serial, Exec::serial);
BENCHMARK_CAPTURE(BM_contours, parallel, Exec::parallel);
BENCHMARK_CAPTURE(BM_genus3_periods, serial, Exec::serial);
BENCHMARK_CAPTURE(BM_genus3_periods, parallel, Exec::parallel);

BENCHMARK_MAIN();
