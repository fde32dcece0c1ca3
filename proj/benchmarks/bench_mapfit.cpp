#include <benchmark/benchmark.h>

#include <numbers>

#include "mapfit/geometry.hpp"
#include "mapfit/mapping.hpp"
#include "mapfit/metrics.hpp"
#include "mapfit/pde.hpp"

using namespace mapfit;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Largest fit in the bundled examples: 126 points, 36 unknowns.
void BM_FitInverseCircle(benchmark::State& state) {
    const MeshPointSet pts = polar_points(1.0, 2.0, 0.0, kTwoPi, 5, 20, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_inverse(pts, 7, {}));
}
BENCHMARK(BM_FitInverseCircle);

void BM_FitForwardCircleAdjustedSeam(benchmark::State& state) {
    const MeshPointSet pts = polar_points(1.0, 2.0, 0.0, kTwoPi, 5, 20, true);
    const FitOptions opts{{}, SeamMode::paper_seam};
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_forward(pts, 7, opts));
}
BENCHMARK(BM_FitForwardCircleAdjustedSeam);

void BM_EvalInverse(benchmark::State& state) {
    const MeshPointSet pts = polar_points(1.0, 2.0, 0.0, kTwoPi, 5, 20, true);
    const auto inv = fit_inverse(pts, 7, {});
    double xi = 1.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_inverse(inv.mapping, xi, 1.3));
        xi = xi < 2.0 ? xi + 1e-4 : 1.0;
    }
}
BENCHMARK(BM_EvalInverse);

void BM_MetricFromInverse(benchmark::State& state) {
    const MeshPointSet pts = eccentric_points({2.0, 6.0, 2.0, 4, 6});
    const auto inv = fit_inverse(pts, 6, {});
    const InverseJetEvaluator jet(inv.mapping);
    double xi = 2.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(metric_from_jet(jet(xi, 1.1)));
        xi = xi < 6.0 ? xi + 1e-4 : 2.0;
    }
}
BENCHMARK(BM_MetricFromInverse);

void BM_SolveConcentric(benchmark::State& state) {
    DirichletProblem prob;
    prob.spec = {2.0, 6.0, 0.0, 4, 6};
    prob.degree = 6;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(assemble(prob)));
}
BENCHMARK(BM_SolveConcentric);

void BM_SolveRefined(benchmark::State& state) {
    DirichletProblem prob;
    prob.spec = {2.0, 6.0, 0.0, static_cast<int>(state.range(0)),
                 static_cast<int>(state.range(0)) + 2};
    prob.degree = 6;
    prob.metric_source = MetricSource::analytic_oracle;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(assemble(prob)));
}
BENCHMARK(BM_SolveRefined)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
