#include "cancelfield/cancel/good_unknowns.hpp"
#include "cancelfield/error.hpp"
#include "cancelfield/numerics/stencils.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace {

using namespace cancelfield;
using namespace cancelfield::cancel;
using num::Dir;
using num::Grid2D;
using num::ScalarField2D;

constexpr double kA = 0.1;

ScalarField2D standard_u(const Grid2D& g) {
    return ScalarField2D::sample(g, [](double x, double z) { return (1 + kA * std::sin(x)) * (1 - std::exp(-z)); });
}

double interior_err(const ScalarField2D& a, const ScalarField2D& b, std::size_t margin = 3) {
    return (a - b).max_abs_rows(margin, a.nz() - margin);
}

// Grids with dx and dz both halving.
Grid2D level(int l, double Z) { return Grid2D(32 << l, (32 << l) + 1, Z); }

TEST(Vorticity, ExactOnLinears) {
    const Grid2D g(16, 17, 2.0);
    const auto w = vorticity(ScalarField2D::sample(g, [](double, double z) { return z; }));
    EXPECT_LT((w - ScalarField2D(g, 1.0)).max_abs(), 1e-13);
}

TEST(Vorticity, SecondOrderOnExponential) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 5.0);
        e[l] = (vorticity(standard_u(g)) -
                ScalarField2D::sample(g, [](double x, double z) { return (1 + kA * std::sin(x)) * std::exp(-z); }))
                   .max_abs();
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.1);
}

TEST(Vorticity, TranslationEquivariant) {
    const Grid2D g(32, 17);
    std::mt19937 rng(8);
    std::uniform_real_distribution<double> U(0, 1);
    ScalarField2D u(g);
    for (auto& v : u.values()) v = U(rng);
    EXPECT_EQ(vorticity(u.shifted_x(5)).values(), vorticity(u).shifted_x(5).values());
    const auto mono = standard_u(g);
    const auto guard = monotonicity_guard(vorticity(mono));
    EXPECT_EQ(good_unknown_g1(mono.shifted_x(3), guard).values(), good_unknown_g1(mono, guard).shifted_x(3).values());
}

TEST(G1, XIndependentIsZero) {
    const Grid2D g(16, 17);
    const auto u = ScalarField2D::sample(g, [](double, double z) { return z; });
    EXPECT_EQ(good_unknown_g1(u, monotonicity_guard(vorticity(u))).max_abs(), 0.0);
}

TEST(G1, ClosedFormSecondOrder) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 3.0);
        const auto u = standard_u(g);
        const auto g1 = good_unknown_g1(u, monotonicity_guard(vorticity(u)));
        const auto exact = ScalarField2D::sample(
            g, [](double x, double z) { return kA * std::cos(x) * std::exp(z) / (1 + kA * std::sin(x)); });
        e[l] = interior_err(g1, exact, 3 << l);
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.15);
}

TEST(G1, GuardViolationThrows) {
    const Grid2D g(16, 17, 2.0);
    const auto u = ScalarField2D::sample(g, [](double x, double z) { return (z - 1) * (z - 1) + 0.1 * std::sin(x); });
    const auto guard = monotonicity_guard(vorticity(u));
    EXPECT_FALSE(guard.satisfied);
    EXPECT_NEAR(g.z(guard.k_min), 1.0, 1e-12);
    EXPECT_THROW(good_unknown_g1(u, guard), MonotonicityViolated);
    EXPECT_THROW(good_unknown_f1(u, guard), MonotonicityViolated);
}

TEST(MagneticGuard, DegenerateFieldThrows) {
    const Grid2D g(16, 17);
    const auto guard = magnetic_guard(ScalarField2D::sample(g, [](double x, double) { return std::cos(x); }));
    EXPECT_FALSE(guard.satisfied);
    EXPECT_THROW(guard.require("test"), DegenerateMagneticField);
}

TEST(F1, XIndependentIsZero) {
    const Grid2D g(16, 17);
    const auto u = ScalarField2D::sample(g, [](double, double z) { return 1 - std::exp(-z); });
    EXPECT_EQ(good_unknown_f1(u, monotonicity_guard(vorticity(u))).max_abs(), 0.0);
}

TEST(F1, EqualsOmegaTimesG1) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 3.0);
        const auto u = ScalarField2D::sample(g, [](double x, double z) { return z + 0.1 * std::sin(x) * z * z; });
        const auto guard = monotonicity_guard(vorticity(u));
        e[l] = interior_err(good_unknown_f1(u, guard), vorticity(u) * good_unknown_g1(u, guard));
    }
    EXPECT_LT(e[1], 1e-3);
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.3);
}

TEST(F1, HandDifferentiatedPolynomialProfile) {
    // u = z + ε sin x z²: ω = 1 + 2ε sin x z, u_x = ε cos x z², ω_x = 2ε cos x z, ω_z = 2ε sin x
    const double eps = 0.1;
    const auto exact = [eps](double x, double z) {
        const double om = 1 + 2 * eps * std::sin(x) * z;
        return 2 * eps * std::cos(x) * z - 2 * eps * std::sin(x) / om * eps * std::cos(x) * z * z;
    };
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 2.0);
        const auto u = ScalarField2D::sample(g, [eps](double x, double z) { return z + eps * std::sin(x) * z * z; });
        e[l] = (good_unknown_f1(u, monotonicity_guard(vorticity(u))) - ScalarField2D::sample(g, exact)).max_abs();
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.2);
}

TEST(Directional, ZeroFieldGivesZero) {
    const Grid2D g(16, 17);
    EXPECT_EQ(directional_derivative(ScalarField2D(g), ScalarField2D(g), standard_u(g)).max_abs(), 0.0);
}

TEST(Directional, ClassicalThetaIsMinusOmegaSquaredG1) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 3.0);
        const auto u = standard_u(g);
        const auto th = classical_theta(u);
        const auto om = vorticity(u);
        const auto lhs = directional_derivative(th.first, th.second, u);
        const auto rhs = -1.0 * (om * om * good_unknown_g1(u, monotonicity_guard(om)));
        e[l] = interior_err(lhs, rhs, 6 << l);
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.3);
}

solver::MhdState mhd_state(const ScalarField2D& u, const ScalarField2D& f) {
    const auto ph = num::reconstruct_psi_h(f);
    return solver::MhdState{0.0, u, num::reconstruct_w(u), f, ph.h, ph.psi, solver::OuterFlow::zero()};
}

TEST(GoodUnknownM, ConstantFieldAndShearVanish) {
    const Grid2D g(16, 17);
    const auto s = mhd_state(ScalarField2D::sample(g, [](double, double z) { return std::tanh(z); }), ScalarField2D(g, 2.0));
    for (unsigned m : {1u, 2u, 3u}) {
        const auto um = good_unknown_m(s, m, magnetic_guard(s.f));
        EXPECT_LT(um.first.max_abs(), 1e-13) << m;
        EXPECT_LT(um.second.max_abs(), 1e-13) << m;
    }
}

TEST(GoodUnknownM, FirstOrderMatchesDirectional) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 5.0);
        const auto s = mhd_state(standard_u(g),
                                 ScalarField2D::sample(g, [](double x, double z) { return 1 + 0.1 * std::cos(x) * std::exp(-z); }));
        const auto m1 = good_unknown_m(s, 1, magnetic_guard(s.f));
        e[l] = interior_err(s.f * m1.first, directional_derivative(s.f, s.h, s.u));
    }
    EXPECT_LT(e[1], 1e-12 + e[0]);
}

TEST(GoodUnknownM, SecondOrderAgainstClosedForm) {
    // u^2 = u_xx − (u_z/f) ψ_xx, ψ = z + 0.1 cos x (1 − e^{−z})
    const auto exact = [](double x, double z) {
        const double uxx = -kA * std::sin(x) * (1 - std::exp(-z));
        const double uz = (1 + kA * std::sin(x)) * std::exp(-z);
        const double f = 1 + 0.1 * std::cos(x) * std::exp(-z);
        const double psixx = -0.1 * std::cos(x) * (1 - std::exp(-z));
        return uxx - uz / f * psixx;
    };
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 5.0);
        const auto s = mhd_state(standard_u(g),
                                 ScalarField2D::sample(g, [](double x, double z) { return 1 + 0.1 * std::cos(x) * std::exp(-z); }));
        e[l] = (good_unknown_m(s, 2, magnetic_guard(s.f)).first - ScalarField2D::sample(g, exact)).max_abs();
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.2);
}

TEST(Recover, ZeroDirectionalGivesZero) {
    const Grid2D g(16, 17);
    const auto om = vorticity(standard_u(g));
    EXPECT_EQ(recover_ux(ScalarField2D(g), om, monotonicity_guard(om)).max_abs(), 0.0);
}

TEST(Recover, MatchesUxSecondOrder) {
    double e[2];
    for (int l = 0; l < 2; ++l) {
        const auto g = level(l, 3.0);
        const auto u = standard_u(g);
        const auto th = classical_theta(u);
        const auto om = vorticity(u);
        const auto rec = recover_ux(directional_derivative(th.first, th.second, u), om, monotonicity_guard(om));
        const auto ux = ScalarField2D::sample(g, [](double x, double z) { return kA * std::cos(x) * (1 - std::exp(-z)); });
        for (std::size_t i = 0; i < g.nx(); ++i) ASSERT_EQ(rec(i, 0), 0.0);
        e[l] = (rec - ux).max_abs();
        EXPECT_LT(interior_err(rec, num::discrete_derivative(u, Dir::x), 0), 2 * e[l] + 1e-3);
    }
    EXPECT_NEAR(std::log2(e[0] / e[1]), 2.0, 0.3);
}

TEST(Recover, NoiseInOmegaStaysWithinConditionEstimate) {
    const auto g = level(1, 3.0);
    const auto u = standard_u(g);
    const auto th = classical_theta(u);
    const auto om = vorticity(u);
    const auto dir = directional_derivative(th.first, th.second, u);
    const auto clean = recover_ux(dir, om, monotonicity_guard(om));
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> U(-1, 1);
    const double noise = 1e-6;
    auto noisy = om;
    for (auto& v : noisy.values()) v *= 1 + noise * U(rng);
    const auto perturbed = recover_ux(dir, noisy, monotonicity_guard(noisy));
    // |δ(ω ∫ D/ω²)| ≤ 3 ε max ω · Z · max|D| / min ω², to first order in ε
    const double bound = 3 * noise * om.max_abs() * g.Z() * dir.max_abs() / (om.min_abs() * om.min_abs());
    const double err = (perturbed - clean).max_abs();
    EXPECT_GT(err, 0.0);
    EXPECT_LE(err, 1.01 * bound);
}

} // namespace
