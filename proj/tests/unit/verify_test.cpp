#include "cancelfield/error.hpp"
#include "cancelfield/jetalg/parse.hpp"
#include "cancelfield/operators/systems.hpp"
#include "cancelfield/verify/commutator_numeric.hpp"
#include "cancelfield/verify/convergence.hpp"
#include "cancelfield/verify/jet_eval.hpp"
#include "cancelfield/verify/radius.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using namespace cancelfield;
using namespace cancelfield::verify;
using num::Grid2D;

TEST(ClosedForm, DerivativesMatchFiniteDifferences) {
    const auto f = ClosedForm::sin_x(2, 0.5) * ClosedForm::zexp(1, -0.7) * ClosedForm::texp(-0.3) +
                   ClosedForm::cos_x(1) * ClosedForm::zexp(2, 0.0, 0.25) + 3.0;
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> U(0.1, 3.0);
    const double h = 1e-5;
    for (int n = 0; n < 20; ++n) {
        const double t = U(rng), x = U(rng), z = U(rng);
        EXPECT_NEAR(f.dx()(t, x, z), (f(t, x + h, z) - f(t, x - h, z)) / (2 * h), 1e-8);
        EXPECT_NEAR(f.dz()(t, x, z), (f(t, x, z + h) - f(t, x, z - h)) / (2 * h), 1e-8);
        EXPECT_NEAR(f.dt()(t, x, z), (f(t + h, x, z) - f(t - h, x, z)) / (2 * h), 1e-8);
    }
}

TEST(ClosedForm, ProductAndIntegralIdentities) {
    const auto a = ClosedForm::sin_x(1) * ClosedForm::zexp(0, -1.0);
    const auto b = ClosedForm::cos_x(3) + ClosedForm::zexp(1, 0.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(0.0, 4.0);
    for (int n = 0; n < 20; ++n) {
        const double t = U(rng), x = U(rng), z = U(rng);
        EXPECT_NEAR((a * b)(t, x, z), a(t, x, z) * b(t, x, z), 1e-13);
        EXPECT_NEAR((a * b).dz()(t, x, z), (a.dz() * b + a * b.dz())(t, x, z), 1e-13);
        EXPECT_NEAR(a.integrate_z().dz()(t, x, z), a(t, x, z), 1e-13);
        EXPECT_NEAR(a.at_z(2.0)(t, x, z), a(t, x, 2.0), 1e-15);
    }
    EXPECT_NEAR(a.integrate_z()(0, 1.0, 0.0), 0.0, 1e-15);
}

TEST(ClosedForm, GridSamplerMatchesPointwise) {
    const auto c = standard_mhd_case();
    const Grid2D g(16, 17);
    const auto s = GridSampler(c.w, g).at(0.4);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        for (std::size_t k = 0; k < g.nz(); ++k) EXPECT_NEAR(s(i, k), c.w(0.4, g.x(i), g.z(k)), 1e-14);
    }
}

TEST(Manufactured, CasesPassSelfConsistencyGate) {
    for (const auto& c : {standard_prandtl_case(), standard_mhd_case(), solver_prandtl_case(), solver_mhd_case()}) {
        const auto r = self_consistency_gate(c);
        EXPECT_TRUE(r.passed) << c.name;
        EXPECT_LT(r.max_constraint_mismatch, 1e-10) << c.name;
        if (c.monotone) EXPECT_GT(r.min_uz, 0.0) << c.name;
    }
}

TEST(Manufactured, GateRejectsInconsistentCase) {
    auto c = standard_prandtl_case();
    c.w = c.w * 1.01;
    EXPECT_THROW(self_consistency_gate(c), InconsistentCase);
}

TEST(Manufactured, OuterTracesAreLidValues) {
    const auto c = standard_mhd_case();
    const auto o = c.outer();
    for (double x : {0.0, 1.0, 2.5}) {
        EXPECT_NEAR(o.uE(0.3, x), c.u(0.3, x, c.Z), 1e-15);
        EXPECT_NEAR(o.fE(0.3, x), (*c.f)(0.3, x, c.Z), 1e-15);
    }
}

TEST(JetEval, ClosedFormJetsEvaluateExpressions) {
    const auto c = standard_prandtl_case();
    const Grid2D g(16, 17);
    ClosedFormJets src(c, g, 0.0);
    const auto r = evaluate(jet::parse_expr("w_z + u_x"), src);
    EXPECT_LT(r.max_abs(), 1e-14);
    EXPECT_THROW(src.jet(jet::parse_jet("u_t")), TimeJetPresent);
}

TEST(Identities, NamesRoundTrip) {
    for (auto id : {Identity::theta_uzz, Identity::f1_g1, Identity::directional_g1, Identity::mhd_theta_h,
                    Identity::mhd_f_u1, Identity::recovery}) {
        EXPECT_EQ(identity_from_name(identity_name(id)), id);
    }
    EXPECT_FALSE(identity_from_name("nope"));
}

TEST(Identities, ExactModeIsRoundoff) {
    const auto p = standard_prandtl_case();
    const auto m = standard_mhd_case();
    const Grid2D g(64, 65);
    for (auto id : {Identity::theta_uzz, Identity::f1_g1, Identity::directional_g1, Identity::mhd_theta_h,
                    Identity::mhd_f_u1}) {
        const auto r = manufactured_residual(identity_is_mhd(id) ? m : p, id, g, Evaluation::exact);
        EXPECT_LE(r.max, 1e-12) << identity_name(id);
    }
    EXPECT_THROW(manufactured_residual(p, Identity::recovery, g, Evaluation::exact), Error);
}

TEST(Identities, DiscreteResidualBoundedByCh2) {
    const auto p = standard_prandtl_case();
    const Grid2D g(64, 65);
    const double h = std::max(g.dx(), g.dz());
    for (auto id : {Identity::f1_g1, Identity::recovery}) {
        const auto r = manufactured_residual(p, id, g);
        EXPECT_GT(r.max, 0.0);
        EXPECT_LE(r.max / (h * h), 10.0) << identity_name(id) << " C=" << r.max / (h * h);
    }
}

TEST(Convergence, SyntheticPowerLaw) {
    const std::vector<double> h{0.1, 0.05, 0.025, 0.0125};
    std::vector<double> e;
    for (double x : h) e.push_back(x * x);
    const auto fit = fit_order(h, e);
    EXPECT_NEAR(fit.slope, 2.0, 0.01);
    EXPECT_LT(fit.residual_rms, 1e-12);
    EXPECT_THROW(fit_order({0.1, 0.05}, {1.0, 0.5}), InsufficientGrids);
}

TEST(Convergence, NoisyFitIntervalCoversSlope) {
    std::mt19937 rng(6);
    std::normal_distribution<double> N(0.0, 0.05);
    std::vector<double> h, e;
    for (int l = 0; l < 5; ++l) {
        h.push_back(std::pow(0.5, l));
        e.push_back(3 * std::pow(h.back(), 1.5) * std::exp(N(rng)));
    }
    const auto fit = fit_order(h, e);
    EXPECT_GT(fit.ci_half_width, 0.0);
    EXPECT_LE(std::abs(fit.slope - 1.5), fit.ci_half_width);
}

TEST(Convergence, GridSequenceChecks) {
    const auto g = doubling_grids({16, 32, 64});
    EXPECT_TRUE(refines_by_two(g));
    EXPECT_EQ(g[1].nz(), 33u);
    const std::vector<Grid2D> bad{Grid2D(16, 17), Grid2D(32, 32), Grid2D(64, 65)};
    EXPECT_FALSE(refines_by_two(bad));
    const auto err = [](const Grid2D& gr, double) { return ErrorNorms{gr.dx() * gr.dx(), 0.0}; };
    EXPECT_THROW(convergence_order("x", bad, err), InvalidGrid);
    const auto r = convergence_order("x", g, err);
    EXPECT_NEAR(r.order, 2.0, 1e-10);
    EXPECT_TRUE(r.refines_by_two);
}

TEST(Convergence, F1G1OrderOnStandardCase) {
    const auto r = convergence_order(standard_prandtl_case(), Identity::f1_g1, doubling_grids({32, 64, 128}));
    EXPECT_TRUE(r.order_within(1.8, 2.2)) << r.order;
}

TEST(Radius, Examples) {
    EXPECT_DOUBLE_EQ(radius_q(1, 0.5, 1.0), 0.25);
    EXPECT_NEAR(radius_q(10, 20.0 / 11.0, 2.0), std::pow(10.0 / 11.0, 11), 1e-15);
    for (unsigned m : {1u, 5u, 100u}) {
        EXPECT_LT(radius_q(m, 1e-9, 1.0), 1e-8);
        EXPECT_LT(radius_q(m, 1.0 - 1e-12, 1.0), 1e-9);
    }
    const auto r = radius_inequality_check(50, 2.0, 200);
    EXPECT_TRUE(r.all_le_one);
    EXPECT_TRUE(r.sampled_below_closed_form);
    EXPECT_LT(r.max_closed_form_dev, 1e-12);
    EXPECT_NEAR(r.rows[0].max_sampled, 0.25, 1e-4);
    EXPECT_THROW(radius_inequality_check(0, 1.0, 100), Error);
}

TEST(CommutatorNumeric, ZeroAndUnitFields) {
    const auto c = standard_prandtl_case();
    const Grid2D g(32, 33);
    const auto zero = commutator_residual_numeric(c, ThetaChoice::zero, standard_test_field(), g);
    EXPECT_EQ(zero.sum, 0.0);
    const auto unit = commutator_residual_numeric(c, ThetaChoice::unit_x, standard_test_field(), g);
    EXPECT_EQ(unit.transported, 0.0);
    EXPECT_GT(unit.sum, 0.01);
}

TEST(CommutatorNumeric, ClassicalPairCancelsNonTrivially) {
    const auto c = standard_prandtl_case();
    const auto r = convergence_order("pair", doubling_grids({32, 64, 128}), [&](const Grid2D& g, double band) {
        const auto n = commutator_residual_numeric(c, ThetaChoice::classical_uzz, standard_test_field(), g, 0.0, band);
        EXPECT_GE(n.transported, 0.01);
        EXPECT_GE(n.bracket, 0.01);
        return ErrorNorms{n.sum, n.sum};
    });
    EXPECT_GE(r.order, 1.8);
}

} // namespace
