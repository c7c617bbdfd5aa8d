#include "cancelfield/error.hpp"
#include "cancelfield/jetalg/diff_expr.hpp"
#include "cancelfield/jetalg/fraction.hpp"
#include "cancelfield/jetalg/parse.hpp"
#include "cancelfield/jetalg/rewrite.hpp"
#include "cancelfield/operators/systems.hpp"

#include <gtest/gtest.h>

#include <random>

namespace {

using namespace cancelfield;
using namespace cancelfield::jet;

DiffExpr P(const char* s) { return parse_expr(s); }

// Random polynomial over a small alphabet with small rational coefficients.
DiffExpr random_expr(std::mt19937& rng, int terms = 4, int max_degree = 3) {
    static const std::array bases = {Base::u, Base::w, Base::f, Base::theta1, Base::test};
    std::uniform_int_distribution<int> nb(0, bases.size() - 1), nd(0, 2), deg(1, max_degree), num(-5, 5), den(1, 4);
    DiffExpr e;
    for (int t = 0; t < terms; ++t) {
        DiffExpr m = Rational(num(rng), den(rng));
        const int d = deg(rng);
        for (int f = 0; f < d; ++f) {
            m *= DiffExpr::jet(bases[nb(rng)], 0, static_cast<std::uint16_t>(nd(rng)), static_cast<std::uint16_t>(nd(rng)));
        }
        e += m;
    }
    return e;
}

// Product rule written independently of differentiate(): expand each
// monomial into a factor list and differentiate one copy at a time.
DiffExpr brute_force_derivative(const DiffExpr& e, Axis a) {
    DiffExpr out;
    for (const auto& [m, c] : e.terms()) {
        std::vector<JetVar> factors;
        for (const auto& [j, p] : m.factors()) {
            for (std::uint32_t k = 0; k < p; ++k) factors.push_back(j);
        }
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].base == Base::zcoord) continue;
            DiffExpr prod = c;
            prod *= DiffExpr(Monomial::mu_power(m.mu()) * Monomial::kappa_power(m.kappa()));
            for (std::size_t k = 0; k < factors.size(); ++k) {
                prod *= DiffExpr::jet(k == i ? factors[k].derived(a) : factors[k]);
            }
            out += prod;
        }
    }
    return out;
}

TEST(Differentiate, SingleJetIncrements) {
    EXPECT_EQ(differentiate(P("u"), Axis::z), P("u_z"));
    EXPECT_EQ(differentiate(P("u_xz"), Axis::t), P("u_txz"));
    EXPECT_TRUE(differentiate(P("7/3"), Axis::x).is_zero());
}

TEST(Differentiate, Leibniz) {
    EXPECT_EQ(differentiate(P("u*w"), Axis::x), P("u_x*w + u*w_x"));
    EXPECT_EQ(differentiate(P("u_z*u_x"), Axis::z), P("u_zz*u_x + u_z*u_xz"));
    EXPECT_EQ(differentiate(P("u^3"), Axis::z), P("3*u^2*u_z"));
}

TEST(Differentiate, CoordinateFunction) {
    EXPECT_EQ(differentiate(P("z"), Axis::z), DiffExpr(1));
    EXPECT_TRUE(differentiate(P("z"), Axis::x).is_zero());
    EXPECT_EQ(differentiate(P("z*u"), Axis::z), P("u + z*u_z"));
}

TEST(Differentiate, MatchesBruteForceProductRule) {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_expr(rng);
        for (auto a : {Axis::t, Axis::x, Axis::z}) {
            ASSERT_EQ(differentiate(e, a), brute_force_derivative(e, a)) << to_string(e);
        }
    }
}

TEST(Differentiate, MixedPartialsCommute) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const auto e = random_expr(rng);
        ASSERT_EQ(differentiate(differentiate(e, Axis::x), Axis::z), differentiate(differentiate(e, Axis::z), Axis::x));
    }
}

TEST(DiffExpr, ExactRationalArithmetic) {
    EXPECT_EQ(P("1/3*u + 2/3*u"), P("u"));
    EXPECT_TRUE((P("1/7*u*w") - P("1/7*w*u")).is_zero());
    EXPECT_EQ(P("(u + w)^2"), P("u^2 + 2*u*w + w^2"));
    EXPECT_EQ(P("mu*u - u*mu"), DiffExpr(0));
}

TEST(DiffExpr, CanonicalFormIsOrderIndependent) {
    EXPECT_EQ(P("w_x*u_z*theta1"), P("theta1*u_z*w_x"));
    EXPECT_EQ(to_string(P("w_x*u_z*theta1")), to_string(P("u_z*theta1*w_x")));
}

TEST(Parse, RoundTripsThroughPrinter) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = random_expr(rng) * (trial % 3 == 0 ? DiffExpr::mu() : DiffExpr(1));
        const auto text = to_string(e);
        ASSERT_EQ(parse_expr(text), e) << text;
        ASSERT_EQ(to_string(parse_expr(text)), text);
    }
}

TEST(Parse, ErrorsCarryColumn) {
    try {
        parse_expr("u_x + q_z");
        FAIL() << "expected ExprParseError";
    } catch (const ExprParseError& e) {
        EXPECT_EQ(e.column(), 7u);
    }
    EXPECT_THROW(parse_expr("u_x +"), ExprParseError);
    EXPECT_THROW(parse_expr("u_y"), ExprParseError);
    EXPECT_THROW(parse_expr("1/0"), ExprParseError);
    EXPECT_THROW(parse_expr("z_x"), ExprParseError);
}

TEST(NormalForm, DivergenceRule) {
    EXPECT_EQ(normal_form(P("w_z"), ops::divergence_system()), P("-u_x"));
    EXPECT_EQ(normal_form(P("w_zz"), ops::divergence_system()), P("-u_xz"));
}

TEST(NormalForm, MomentumRule) {
    EXPECT_EQ(normal_form(P("u_t"), ops::prandtl_system()), P("mu*u_zz - u*u_x - w*u_z - pE_x"));
}

TEST(NormalForm, IrreducibleInputUnchanged) {
    for (const auto& rs : {ops::prandtl_system(), ops::mhd_stream_system(), ops::lemma_system()}) {
        EXPECT_EQ(normal_form(P("u"), rs), P("u"));
        EXPECT_EQ(normal_form(P("u_xx*test_z"), rs), P("u_xx*test_z"));
    }
}

TEST(NormalForm, IsIdempotentAndReplayable) {
    std::mt19937 rng(42);
    const auto rs = ops::prandtl_system();
    for (int trial = 0; trial < 60; ++trial) {
        auto e = random_expr(rng, 3, 2) + P("u_t*w_z") * Rational(trial % 5);
        const auto red = reduce(e, rs);
        ASSERT_EQ(normal_form(red.result, rs), red.result);
        ASSERT_EQ(replay(e, rs, red.steps), red.result);
        ASSERT_EQ(rs.find_rule(JetVar{Base::w, 0, 0, 1}), rs.find_rule(JetVar{Base::w, 0, 2, 3}));
    }
}

TEST(NormalForm, NoRuleLeftApplicable) {
    std::mt19937 rng(5);
    const auto rs = ops::mhd_stream_system();
    for (int trial = 0; trial < 40; ++trial) {
        const auto nf = normal_form(random_expr(rng, 3, 2), rs);
        for (const auto& j : nf.jets()) ASSERT_EQ(rs.find_rule(j), RewriteSystem::npos) << to_string(j);
    }
}

TEST(Rewrite, SelfReferentialRuleRejected) {
    EXPECT_THROW(RewriteRule("bad", parse_jet("u"), P("u_z")), InvalidRule);
    EXPECT_THROW(RewriteRule("bad", parse_jet("u"), P("u + w")), InvalidRule);
}

TEST(Rewrite, CyclicSystemHitsIterationLimit) {
    RewriteSystem rs("cycle", {RewriteRule("a", parse_jet("u"), P("w")), RewriteRule("b", parse_jet("w"), P("u"))});
    EXPECT_THROW(normal_form(P("u"), rs, {50}), IterationLimitExceeded);
}

TEST(Rewrite, WithoutDropsNamedRule) {
    const auto rs = ops::prandtl_system().without(ops::kRuleDivergence);
    EXPECT_EQ(normal_form(P("w_z"), rs), P("w_z"));
}

TEST(TangentialOrder, Examples) {
    EXPECT_EQ(tangential_order(P("w_x*test_z")), 2);
    EXPECT_EQ(tangential_order(P("u_zz")), 0);
    EXPECT_EQ(tangential_order(P("u_x*test_x + u_z")), 1);
    EXPECT_EQ(tangential_order(P("w")), 1);
    EXPECT_EQ(tangential_order(DiffExpr(3)), 0);
    EXPECT_THROW(tangential_order(P("u_t*u")), TimeJetPresent);
}

TEST(Fraction, QuotientRuleClearsDenominator) {
    // (u_x / u_z)_z · u_z² = u_xz u_z − u_x u_zz
    const Fraction q(P("u_x"), P("u_z"), 1);
    const auto d = q.derivative(Axis::z);
    EXPECT_EQ(d.power(), 2u);
    EXPECT_EQ(d.cleared(2), P("u_xz*u_z - u_x*u_zz"));
    EXPECT_EQ(d.cleared(3), P("u_xz*u_z^2 - u_x*u_zz*u_z"));
}

TEST(Fraction, SumsBringToCommonPower) {
    const Fraction a(P("u"), P("f"), 1);
    const Fraction b(P("w"), P("f"), 2);
    EXPECT_EQ((a + b).cleared(2), P("u*f + w"));
    EXPECT_THROW(a + Fraction(P("u"), P("w"), 1), Error);
}

} // namespace
