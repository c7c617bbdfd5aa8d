#include "cancelfield/error.hpp"
#include "cancelfield/numerics/stencils.hpp"
#include "cancelfield/solver/run.hpp"
#include "cancelfield/verify/solver_study.hpp"

#include "heat_oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace {

using namespace cancelfield;
using namespace cancelfield::solver;
using num::Grid2D;
using num::ScalarField2D;

std::vector<double> column(const ScalarField2D& s, std::size_t i) {
    std::vector<double> c(s.nz());
    for (std::size_t k = 0; k < s.nz(); ++k) c[k] = s(i, k);
    return c;
}

double max_abs_px(const std::vector<double>& px, const Grid2D& g, const std::function<double(double)>& exact) {
    double m = 0;
    for (std::size_t i = 0; i < g.nx(); ++i) m = std::max(m, std::abs(px[i] - exact(g.x(i))));
    return m;
}

TEST(OuterFlow, BernoulliTraces) {
    const Grid2D g(32, 9);
    for (double v : bernoulli_px(OuterFlow::uniform(2.0), g, 0.3)) EXPECT_EQ(v, 0.0);
    EXPECT_LT(max_abs_px(bernoulli_px(OuterFlow::steady_sine(1.0), g, 0.0), g,
                         [](double x) { return -std::sin(x) * std::cos(x); }),
              1e-15);
    const double t = 0.7;
    EXPECT_LT(max_abs_px(bernoulli_px(OuterFlow::decaying_sine(1.0, 1.0), g, t), g,
                         [t](double x) {
                             return std::exp(-t) * std::sin(x) - std::exp(-2 * t) * std::sin(x) * std::cos(x);
                         }),
              1e-15);
}

TEST(OuterFlow, TotalPressureAddsMagneticTerm) {
    const Grid2D g(16, 9);
    OuterFlow o = OuterFlow::zero();
    o.fE = [](double, double x) { return std::sin(x); };
    o.fE_x = [](double, double x) { return std::cos(x); };
    EXPECT_LT(max_abs_px(total_pressure_px(o, g, 0.0), g, [](double x) { return std::sin(x) * std::cos(x); }), 1e-15);
}

TEST(Scheme, NamesRoundTrip) {
    for (auto s : {Scheme::upwind1, Scheme::central2}) EXPECT_EQ(scheme_from_string(to_string(s)), s);
    EXPECT_FALSE(scheme_from_string("rk4"));
}

TEST(Stepper, ZeroDataStaysZero) {
    const Grid2D g(32, 33);
    SolverConfig cfg;
    cfg.t_end = 0.5;
    for (auto scheme : {Scheme::upwind1, Scheme::central2}) {
        cfg.scheme = scheme;
        auto r = run(make_prandtl_state(ScalarField2D(g), OuterFlow::zero()), cfg);
        EXPECT_GT(r.steps, 0u);
        for (double v : r.final_state.u.values()) ASSERT_EQ(v, 0.0);
        for (double v : r.final_state.w.values()) ASSERT_EQ(v, 0.0);
        auto m = run(make_mhd_state(ScalarField2D(g), ScalarField2D(g), OuterFlow::zero()), cfg);
        for (double v : m.final_state.u.values()) ASSERT_EQ(v, 0.0);
        for (double v : m.final_state.f.values()) ASSERT_EQ(v, 0.0);
    }
}

TEST(Stepper, ConstantMagneticFieldIsSteady) {
    const Grid2D g(32, 33);
    SolverConfig cfg;
    cfg.t_end = 0.2;
    auto r = run(make_mhd_state(ScalarField2D(g), ScalarField2D(g, 1.5), OuterFlow::uniform(0.0, 1.5)), cfg);
    for (double v : r.final_state.u.values()) ASSERT_EQ(v, 0.0);
    for (double v : r.final_state.f.values()) ASSERT_NEAR(v, 1.5, 1e-13);
    EXPECT_LT(r.final_state.h.max_abs(), 1e-13);
}

TEST(Stepper, XIndependentPrandtlMatchesHeatOracle) {
    const Grid2D g(16, 41, 4.0);
    SolverConfig cfg;
    cfg.mu = 0.7;
    cfg.dt = 2e-3;
    for (auto scheme : {Scheme::upwind1, Scheme::central2}) {
        cfg.scheme = scheme;
        auto s = make_prandtl_state(ScalarField2D::sample(g, [](double, double z) { return std::tanh(2 * z); }),
                                    OuterFlow::uniform(1.0));
        oracle::HeatOracle1D oracle(column(s.u, 0), cfg.mu, g.dz(), false, 0.0, 1.0);
        for (std::size_t n = 0; n < 100; ++n) {
            s = step_prandtl(s, cfg, *cfg.dt, {}, n);
            oracle.step(*cfg.dt);
            for (std::size_t i = 0; i < g.nx(); ++i) {
                for (std::size_t k = 0; k < g.nz(); ++k) ASSERT_NEAR(s.u(i, k), oracle.values()[k], 1e-12) << n;
            }
            ASSERT_EQ(s.w.max_abs(), 0.0);
        }
    }
}

TEST(Stepper, XIndependentMhdDecouplesIntoHeatOracles) {
    const Grid2D g(16, 41, 4.0);
    SolverConfig cfg;
    cfg.mu = 1.0;
    cfg.kappa = 0.3;
    cfg.dt = 2e-3;
    cfg.scheme = Scheme::central2;
    auto s = make_mhd_state(ScalarField2D::sample(g, [](double, double z) { return 1 - std::exp(-3 * z); }),
                            ScalarField2D::sample(g, [](double, double z) { return 1 + 0.5 * std::exp(-z * z); }),
                            OuterFlow::uniform(1.0, 1.0));
    oracle::HeatOracle1D ou(column(s.u, 0), cfg.mu, g.dz(), false, 0.0, 1.0);
    oracle::HeatOracle1D of(column(s.f, 0), cfg.kappa, g.dz(), true, 0.0, 1.0);
    for (std::size_t n = 0; n < 100; ++n) {
        s = step_mhd(s, cfg, *cfg.dt, {}, n);
        ou.step(*cfg.dt);
        of.step(*cfg.dt);
        for (std::size_t i = 0; i < g.nx(); ++i) {
            for (std::size_t k = 0; k < g.nz(); ++k) {
                ASSERT_NEAR(s.u(i, k), ou.values()[k], 1e-12) << n;
                ASSERT_NEAR(s.f(i, k), of.values()[k], 1e-12) << n;
            }
        }
    }
}

TEST(Stepper, InvariantsReestablishedEachStep) {
    const Grid2D g(32, 33);
    SolverConfig cfg;
    auto s = make_prandtl_state(
        ScalarField2D::sample(g, [](double x, double z) { return (1 + 0.2 * std::sin(x)) * (1 - std::exp(-z)); }),
        OuterFlow::steady_sine(0.2, 1.0));
    for (std::size_t n = 0; n < 20; ++n) {
        s = step_prandtl(s, cfg, select_dt(s, cfg, n), {}, n);
        for (std::size_t i = 0; i < g.nx(); ++i) {
            ASSERT_EQ(s.u(i, 0), 0.0);
            ASSERT_EQ(s.u(i, g.nz() - 1), s.outer.uE(s.t, g.x(i)));
        }
        ASSERT_EQ(s.w.values(), num::reconstruct_w(s.u).values());
    }
}

TEST(Stepper, FixedDtPastCflIsRejectedWithStep) {
    const Grid2D g(64, 65);
    SolverConfig cfg;
    cfg.scheme = Scheme::central2;
    auto s = make_prandtl_state(ScalarField2D::sample(g, [](double, double z) { return 1 - std::exp(-z); }),
                                OuterFlow::uniform(1.0));
    cfg.dt = 100 * cfl_bound(s, cfg);
    try {
        select_dt(s, cfg, 7);
        FAIL() << "expected CflViolation";
    } catch (const CflViolation& e) {
        EXPECT_NE(std::string(e.what()).find("step 7"), std::string::npos);
    }
}

TEST(Stepper, AutoDtRespectsCapAndCfl) {
    const Grid2D g(32, 33);
    SolverConfig cfg;
    cfg.dt_max = 1e-3;
    auto s = make_prandtl_state(ScalarField2D(g), OuterFlow::zero());
    EXPECT_EQ(select_dt(s, cfg), 1e-3);
    auto fast = make_prandtl_state(ScalarField2D::sample(g, [](double, double z) { return 50 * (1 - std::exp(-z)); }),
                                   OuterFlow::uniform(50.0));
    cfg.dt_max = 1.0;
    EXPECT_NEAR(select_dt(fast, cfg), cfg.cfl * g.dx() / 50.0, 1e-15);
}

TEST(Run, TEndAtStartReturnsInput) {
    const Grid2D g(16, 17);
    SolverConfig cfg;
    cfg.t_end = 0.0;
    auto s = make_prandtl_state(ScalarField2D::sample(g, [](double, double z) { return z / 10; }), OuterFlow::uniform(1.0));
    const auto r = run(s, cfg, {1});
    EXPECT_EQ(r.steps, 0u);
    EXPECT_TRUE(r.snapshots.empty());
    EXPECT_EQ(r.final_state.u.values(), s.u.values());
}

TEST(Run, LandsOnTEndAndSnapshotsDeterministic) {
    const Grid2D g(32, 33);
    SolverConfig cfg;
    cfg.t_end = 0.123;
    const auto init = make_prandtl_state(
        ScalarField2D::sample(g, [](double x, double z) { return (1 + 0.1 * std::cos(x)) * (1 - std::exp(-z)); }),
        OuterFlow::steady_sine(0.1, 1.0));
    const auto a = run(init, cfg, {3});
    const auto b = run(init, cfg, {3});
    EXPECT_EQ(a.final_state.t, 0.123);
    ASSERT_EQ(a.snapshots.size(), a.steps / 3);
    ASSERT_EQ(a.snapshots.size(), b.snapshots.size());
    for (std::size_t n = 0; n < a.snapshots.size(); ++n) {
        EXPECT_EQ(a.snapshots[n].step, 3 * (n + 1));
        EXPECT_EQ(a.snapshots[n].u.values(), b.snapshots[n].u.values());
    }
    EXPECT_EQ(a.final_state.u.values(), b.final_state.u.values());
}

TEST(Run, NonFiniteNamesStep) {
    const Grid2D g(16, 17);
    SolverConfig cfg;
    cfg.t_end = 0.05;
    RunOptions opts;
    opts.forcing.u = pointwise_source([](double t, double, double) { return t > 0.02 ? std::nan("") : 0.0; });
    try {
        run(make_prandtl_state(ScalarField2D(g), OuterFlow::zero()), cfg, opts);
        FAIL() << "expected NonFinite";
    } catch (const NonFinite& e) {
        EXPECT_NE(std::string(e.what()).find("step "), std::string::npos);
    }
}

TEST(Run, TimeErrorIsFirstOrder) {
    // Differences between successive dt halvings isolate the time error.
    const auto c = verify::solver_prandtl_case();
    const Grid2D g(32, 33);
    std::vector<ScalarField2D> sols;
    for (double dt : {4e-3, 2e-3, 1e-3}) {
        SolverConfig cfg;
        cfg.dt = dt;
        cfg.t_end = 0.2;
        cfg.scheme = Scheme::central2;
        RunOptions opts;
        opts.forcing = verify::manufactured_forcing(c);
        sols.push_back(run(verify::manufactured_prandtl_state(c, g), cfg, opts).final_state.u);
    }
    const double d1 = (sols[0] - sols[1]).max_abs();
    const double d2 = (sols[1] - sols[2]).max_abs();
    EXPECT_NEAR(d1 / d2, 2.0, 0.4);
}

} // namespace
