#include "cancelfield/verify/commutator_numeric.hpp"

#include "cancelfield/error.hpp"
#include "cancelfield/jetalg/rewrite.hpp"
#include "cancelfield/operators/systems.hpp"
#include "cancelfield/operators/transport_op.hpp"
#include "cancelfield/verify/identities.hpp"
#include "cancelfield/verify/jet_eval.hpp"

#include <algorithm>

namespace cancelfield::verify {

using jet::Base;

namespace {

DiffExpr J(Base b, std::uint16_t dx = 0, std::uint16_t dz = 0) { return DiffExpr::jet(b, 0, dx, dz); }

struct PairExprs {
    DiffExpr transported;
    DiffExpr bracket;
};

PairExprs build(ThetaChoice choice) {
    DiffExpr th1, th2, p_th2;
    switch (choice) {
    case ThetaChoice::classical_uzz:
        th1 = J(Base::u, 0, 2);
        th2 = J(Base::w, 0, 2);
        p_th2 = jet::normal_form(ops::apply_operator(ops::TransportDiffusionOp::prandtl(), th2),
                                 ops::prandtl_time_system());
        break;
    case ThetaChoice::mhd_h:
        th1 = J(Base::f);
        th2 = J(Base::h);
        p_th2 = jet::normal_form(ops::apply_operator(ops::TransportDiffusionOp::magnetic(), th2),
                                 ops::mhd_time_system());
        break;
    case ThetaChoice::unit_x: th1 = 1; break;
    case ThetaChoice::zero: break;
    }
    const DiffExpr test_z = J(Base::test, 0, 1);
    return {(p_th2 - th2 * J(Base::w, 0, 1)) * test_z, -(th1 * J(Base::w, 1) * test_z)};
}

} // namespace

std::string_view theta_name(ThetaChoice c) noexcept {
    switch (c) {
    case ThetaChoice::classical_uzz: return "classical_uzz";
    case ThetaChoice::mhd_h: return "mhd_h";
    case ThetaChoice::unit_x: return "unit_x";
    case ThetaChoice::zero: return "zero";
    }
    return "?";
}

std::optional<ThetaChoice> theta_from_name(std::string_view name) noexcept {
    for (auto c : {ThetaChoice::classical_uzz, ThetaChoice::mhd_h, ThetaChoice::unit_x, ThetaChoice::zero}) {
        if (theta_name(c) == name) return c;
    }
    return std::nullopt;
}

ClosedForm standard_test_field() {
    return ClosedForm::zexp(1, 0.0) * (ClosedForm(1.0) + ClosedForm::cos_x(1, 0.5));
}

CommutatorNorms commutator_residual_numeric(const ManufacturedCase& c, ThetaChoice theta, const ClosedForm& test,
                                            const num::Grid2D& g, double t, std::optional<double> band) {
    if (theta == ThetaChoice::mhd_h && !c.is_mhd()) throw Error("theta mhd_h needs an MHD case, got " + c.name);
    static const PairExprs classical = build(ThetaChoice::classical_uzz);
    static const PairExprs magnetic = build(ThetaChoice::mhd_h);
    const PairExprs local = theta == ThetaChoice::classical_uzz ? classical
                            : theta == ThetaChoice::mhd_h       ? magnetic
                                                                : build(theta);
    DiscreteJets src(c, g, t, test);
    const ScalarField2D a = evaluate(local.transported, src);
    const ScalarField2D b = evaluate(local.bracket, src);
    const double bw = band.value_or(default_band(g));
    return {interior_norms(a, bw).max, interior_norms(b, bw).max, interior_norms(a + b, bw).max};
}

} // namespace cancelfield::verify
