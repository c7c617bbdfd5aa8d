#include "cancelfield/verify/identities.hpp"

#include "cancelfield/cancel/good_unknowns.hpp"
#include "cancelfield/error.hpp"
#include "cancelfield/jetalg/rewrite.hpp"
#include "cancelfield/numerics/stencils.hpp"
#include "cancelfield/operators/systems.hpp"
#include "cancelfield/operators/transport_op.hpp"
#include "cancelfield/verify/jet_eval.hpp"

#include <algorithm>
#include <array>

namespace cancelfield::verify {

using jet::Base;
using num::Dir;

namespace {

constexpr std::array<std::pair<Identity, std::string_view>, 6> kNames{{
    {Identity::theta_uzz, "theta_uzz"},
    {Identity::f1_g1, "f1_g1"},
    {Identity::directional_g1, "directional_g1"},
    {Identity::mhd_theta_h, "mhd_theta_h"},
    {Identity::mhd_f_u1, "mhd_f_u1"},
    {Identity::recovery, "recovery"},
}};

ErrorNorms worst(ErrorNorms a, ErrorNorms b) { return {std::max(a.max, b.max), std::max(a.l2, b.l2)}; }

ScalarField2D sample(const ClosedForm& f, const Grid2D& g, double t) {
    return ScalarField2D::sample(g, [&](double x, double z) { return f(t, x, z); });
}

DiffExpr J(Base b, std::uint16_t dx = 0, std::uint16_t dz = 0) { return DiffExpr::jet(b, 0, dx, dz); }

// P(q) − (Θ·∇)v with ∂_t-jets eliminated, one entry per component.
struct TransportClaim {
    DiffExpr first;
    DiffExpr second;
};

const TransportClaim& theta_uzz_claim() {
    static const TransportClaim claim = [] {
        const auto P = ops::TransportDiffusionOp::prandtl();
        const auto theta = ops::CancellationField::velocity_zz();
        const auto rs = ops::prandtl_time_system();
        auto side = [&](Base b) {
            return jet::normal_form(ops::apply_operator(P, J(b, 0, 2)) - ops::directional(theta, J(b)), rs);
        };
        return TransportClaim{side(Base::u), side(Base::w)};
    }();
    return claim;
}

const TransportClaim& theta_h_claim() {
    static const TransportClaim claim = [] {
        const auto P = ops::TransportDiffusionOp::magnetic();
        const auto rs = ops::mhd_time_system();
        const DiffExpr f = J(Base::f), h = J(Base::h);
        auto dir = [&](Base b) { return f * J(b, 1) + h * J(b, 0, 1); };
        return TransportClaim{jet::normal_form(ops::apply_operator(P, f) - dir(Base::u), rs),
                              jet::normal_form(ops::apply_operator(P, h) - dir(Base::w), rs)};
    }();
    return claim;
}

void require_mhd(const ManufacturedCase& c, Identity id) {
    if (!c.is_mhd()) {
        throw Error("identity " + std::string(identity_name(id)) + " needs an MHD case, got " + c.name);
    }
}

} // namespace

double default_band(const num::Grid2D& g) noexcept { return static_cast<double>(kBoundaryMargin) * g.dz(); }

ErrorNorms interior_norms(const ScalarField2D& r, double band) {
    const auto& g = r.grid();
    // Rows sitting on the band edge count as inside.
    const double tol = 1e-9 * g.dz();
    std::size_t k0 = 0, k1 = g.nz();
    while (k0 < g.nz() && g.z(k0) < band - tol) ++k0;
    while (k1 > k0 && g.z(k1 - 1) > g.Z() - band + tol) --k1;
    if (k0 >= k1) throw Error("boundary band leaves no interior rows");
    return {r.max_abs_rows(k0, k1), r.rms_rows(k0, k1)};
}

std::string_view identity_name(Identity id) noexcept {
    for (const auto& [k, v] : kNames) {
        if (k == id) return v;
    }
    return "?";
}

std::optional<Identity> identity_from_name(std::string_view name) noexcept {
    for (const auto& [k, v] : kNames) {
        if (v == name) return k;
    }
    return std::nullopt;
}

bool identity_is_mhd(Identity id) noexcept { return id == Identity::mhd_theta_h || id == Identity::mhd_f_u1; }

ErrorNorms manufactured_residual(const ManufacturedCase& c, Identity id, const num::Grid2D& g, Evaluation mode,
                                 double t, std::optional<double> band) {
    const bool exact = mode == Evaluation::exact;
    const double b = band.value_or(default_band(g));
    auto norms = [b](const ScalarField2D& r) { return interior_norms(r, b); };
    auto claim_residual = [&](const TransportClaim& claim, JetSource& src) {
        return worst(norms(evaluate(claim.first, src)), norms(evaluate(claim.second, src)));
    };
    if (identity_is_mhd(id)) require_mhd(c, id);

    switch (id) {
    case Identity::theta_uzz:
    case Identity::mhd_theta_h: {
        const auto& claim = id == Identity::theta_uzz ? theta_uzz_claim() : theta_h_claim();
        if (exact) {
            ClosedFormJets src(c, g, t);
            return claim_residual(claim, src);
        }
        DiscreteJets src(c, g, t);
        return claim_residual(claim, src);
    }

    case Identity::f1_g1: {
        if (exact) {
            ClosedFormJets s(c, g, t);
            const auto& om = s.jet(jet::jv(Base::u, 0, 0, 1));
            const auto& om_x = s.jet(jet::jv(Base::u, 0, 1, 1));
            const auto& om_z = s.jet(jet::jv(Base::u, 0, 0, 2));
            const auto& ux = s.jet(jet::jv(Base::u, 0, 1, 0));
            ScalarField2D f1 = om_x - om_z / om * ux;
            // g₁ = (u_xz ω − u_x ω_z)/ω², expanded independently of f1
            ScalarField2D g1 = (om_x * om - ux * om_z) / (om * om);
            return norms(f1 - om * g1);
        }
        ClosedFormJets s(c, g, t);
        const auto& om_s = s.jet(jet::jv(Base::u, 0, 0, 1));
        const ScalarField2D f1_exact =
            s.jet(jet::jv(Base::u, 0, 1, 1)) - s.jet(jet::jv(Base::u, 0, 0, 2)) / om_s * s.jet(jet::jv(Base::u, 0, 1, 0));
        const ScalarField2D u = sample(c.u, g, t);
        const ScalarField2D om = cancel::vorticity(u);
        const auto guard = cancel::monotonicity_guard(om);
        return worst(norms(cancel::good_unknown_f1(u, guard) - f1_exact),
                     norms(om * cancel::good_unknown_g1(u, guard) - f1_exact));
    }

    case Identity::directional_g1: {
        if (exact) {
            ClosedFormJets s(c, g, t);
            const auto& om = s.jet(jet::jv(Base::u, 0, 0, 1));
            const auto& om_x = s.jet(jet::jv(Base::u, 0, 1, 1));
            const auto& om_z = s.jet(jet::jv(Base::u, 0, 0, 2));
            const auto& ux = s.jet(jet::jv(Base::u, 0, 1, 0));
            const auto& w_zz = s.jet(jet::jv(Base::w, 0, 0, 2));
            ScalarField2D lhs = om_z * ux + w_zz * om;
            ScalarField2D g1 = (om_x * om - ux * om_z) / (om * om);
            return norms(lhs + om * om * g1);
        }
        const ScalarField2D u = sample(c.u, g, t);
        const ScalarField2D om = cancel::vorticity(u);
        const auto guard = cancel::monotonicity_guard(om);
        const auto theta = cancel::classical_theta(u);
        ScalarField2D lhs = cancel::directional_derivative(theta.first, theta.second, u);
        return norms(lhs + om * om * cancel::good_unknown_g1(u, guard));
    }

    case Identity::mhd_f_u1: {
        ClosedFormJets s(c, g, t);
        const auto& f = s.jet(jet::jv(Base::f));
        const auto& h = s.jet(jet::jv(Base::h));
        const ScalarField2D rhs_u = f * s.jet(jet::jv(Base::u, 0, 1, 0)) + h * s.jet(jet::jv(Base::u, 0, 0, 1));
        const ScalarField2D rhs_f = f * s.jet(jet::jv(Base::f, 0, 1, 0)) + h * s.jet(jet::jv(Base::f, 0, 0, 1));
        if (exact) {
            const auto& psi_x = s.jet(jet::jv(Base::psi, 0, 1, 0));
            ScalarField2D u1 = s.jet(jet::jv(Base::u, 0, 1, 0)) - s.jet(jet::jv(Base::u, 0, 0, 1)) / f * psi_x;
            ScalarField2D f1 = s.jet(jet::jv(Base::f, 0, 1, 0)) - s.jet(jet::jv(Base::f, 0, 0, 1)) / f * psi_x;
            return worst(norms(f * u1 - rhs_u), norms(f * f1 - rhs_f));
        }
        const auto state = solver::make_mhd_state(sample(c.u, g, t), sample(*c.f, g, t), c.outer(), t);
        const auto guard = cancel::magnetic_guard(state.f);
        const auto m1 = cancel::good_unknown_m(state, 1, guard);
        return worst(norms(state.f * m1.first - rhs_u), norms(state.f * m1.second - rhs_f));
    }

    case Identity::recovery: {
        if (exact) throw Error("recovery has no exact evaluation mode");
        const ScalarField2D u = sample(c.u, g, t);
        const ScalarField2D om = cancel::vorticity(u);
        const auto guard = cancel::monotonicity_guard(om);
        const auto theta = cancel::classical_theta(u);
        const ScalarField2D dir = cancel::directional_derivative(theta.first, theta.second, u);
        return norms(cancel::recover_ux(dir, om, guard) - sample(c.u.dx(), g, t));
    }
    }
    throw Error("unknown identity");
}

} // namespace cancelfield::verify
