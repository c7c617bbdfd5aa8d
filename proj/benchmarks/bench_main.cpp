#include "cancelfield/jetalg/parse.hpp"
#include "cancelfield/numerics/stencils.hpp"
#include "cancelfield/numerics/tridiag.hpp"
#include "cancelfield/operators/verify_cases.hpp"
#include "cancelfield/solver/stepper.hpp"
#include "cancelfield/verify/identities.hpp"
#include "cancelfield/verify/radius.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

namespace {

using namespace cancelfield;

void BM_NormalFormMomentumSquared(benchmark::State& state) {
    const auto e = jet::parse_expr("u_t^2*w_zz + u_tz*u_x");
    const auto rs = ops::prandtl_system();
    for (auto _ : state) benchmark::DoNotOptimize(jet::normal_form(e, rs));
}
BENCHMARK(BM_NormalFormMomentumSquared);

void BM_VerifyCase(benchmark::State& state, const char* name) {
    for (auto _ : state) benchmark::DoNotOptimize(ops::verify_by_name(name));
}
BENCHMARK_CAPTURE(BM_VerifyCase, theta_uzz, "theta_uzz")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCase, lemma_generic, "lemma_generic")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_VerifyCase, symmetric_system_m1, "symmetric_system_m1")->Unit(benchmark::kMillisecond);

num::ScalarField2D profile(const num::Grid2D& g) {
    return num::ScalarField2D::sample(g, [](double x, double z) { return (1 + 0.1 * std::sin(x)) * (1 - std::exp(-z)); });
}

void BM_DiscreteDerivative(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto u = profile(num::Grid2D(n, n + 1));
    const auto axis = state.range(1) == 0 ? num::Dir::x : num::Dir::z;
    for (auto _ : state) benchmark::DoNotOptimize(num::discrete_derivative(u, axis, 2));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(u.grid().size()));
}
BENCHMARK(BM_DiscreteDerivative)->ArgsProduct({{64, 256}, {0, 1}});

void BM_ReconstructW(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto u = profile(num::Grid2D(n, n + 1));
    for (auto _ : state) benchmark::DoNotOptimize(num::reconstruct_w(u));
}
BENCHMARK(BM_ReconstructW)->Arg(64)->Arg(256);

void BM_Tridiagonal(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<double> a(n, -1.0), b(n, 4.0), c(n, -1.0), d(n, 1.0), x(n);
    num::TridiagonalSolver solver(n);
    for (auto _ : state) {
        solver.solve(a, b, c, d, x);
        benchmark::DoNotOptimize(x.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Tridiagonal)->Range(64, 4096);

void BM_StepPrandtl(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const num::Grid2D g(n, n + 1);
    solver::SolverConfig cfg;
    cfg.scheme = state.range(1) == 0 ? solver::Scheme::upwind1 : solver::Scheme::central2;
    auto s = solver::make_prandtl_state(profile(g), solver::OuterFlow::steady_sine(0.1, 1.0));
    const double dt = solver::select_dt(s, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(solver::step_prandtl(s, cfg, dt));
}
BENCHMARK(BM_StepPrandtl)->ArgsProduct({{64, 128}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_StepMhd(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const num::Grid2D g(n, n + 1);
    solver::SolverConfig cfg;
    auto s = solver::make_mhd_state(profile(g), num::ScalarField2D(g, 1.0), solver::OuterFlow::uniform(1.0, 1.0));
    const double dt = solver::select_dt(s, cfg);
    for (auto _ : state) benchmark::DoNotOptimize(solver::step_mhd(s, cfg, dt));
}
BENCHMARK(BM_StepMhd)->Arg(64)->Arg(128)->Unit(benchmark::kMicrosecond);

void BM_IdentityResidual(benchmark::State& state) {
    const auto c = verify::standard_prandtl_case();
    const num::Grid2D g(128, 129);
    const auto id = static_cast<verify::Identity>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify::manufactured_residual(c, id, g));
}
BENCHMARK(BM_IdentityResidual)
    ->Arg(static_cast<int>(verify::Identity::theta_uzz))
    ->Arg(static_cast<int>(verify::Identity::f1_g1))
    ->Arg(static_cast<int>(verify::Identity::recovery))
    ->Unit(benchmark::kMillisecond);

void BM_RadiusCheck(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(verify::radius_inequality_check(1000, 1.0, 1000));
}
BENCHMARK(BM_RadiusCheck)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
