#include "cancelfield/cancel/good_unknowns.hpp"

#include "cancelfield/error.hpp"
#include "cancelfield/numerics/stencils.hpp"

namespace cancelfield::cancel {

using num::Dir;
using num::discrete_derivative;

ScalarField2D vorticity(const ScalarField2D& u) { return discrete_derivative(u, Dir::z); }

ScalarField2D good_unknown_g1(const ScalarField2D& u, const MonotonicityGuard& guard) {
    guard.require("good_unknown_g1");
    const ScalarField2D omega = vorticity(u);
    ScalarField2D q = discrete_derivative(u, Dir::x) / omega;
    return discrete_derivative(q, Dir::z).require_finite("g1");
}

ScalarField2D good_unknown_f1(const ScalarField2D& u, const MonotonicityGuard& guard) {
    guard.require("good_unknown_f1");
    const ScalarField2D omega = vorticity(u);
    ScalarField2D out = discrete_derivative(omega, Dir::x) -
                        discrete_derivative(omega, Dir::z) / omega * discrete_derivative(u, Dir::x);
    out.require_finite("f1");
    return out;
}

ScalarField2D directional_derivative(const ScalarField2D& theta1, const ScalarField2D& theta2,
                                     const ScalarField2D& target) {
    ScalarField2D out = theta1 * discrete_derivative(target, Dir::x) + theta2 * discrete_derivative(target, Dir::z);
    out.require_finite("directional_derivative");
    return out;
}

FieldPair classical_theta(const ScalarField2D& u) {
    return {discrete_derivative(u, Dir::z, 2), discrete_derivative(num::reconstruct_w(u), Dir::z, 2)};
}

FieldPair good_unknown_m(const solver::MhdState& s, unsigned m, const NonVanishingGuard& f_guard) {
    if (m == 0) throw Error("good_unknown_m: m must be positive");
    f_guard.require("good_unknown_m");
    const ScalarField2D psi_m = num::repeated_x_derivative(s.psi, m);
    ScalarField2D um =
        num::repeated_x_derivative(s.u, m) - discrete_derivative(s.u, Dir::z) / s.f * psi_m;
    ScalarField2D fm =
        num::repeated_x_derivative(s.f, m) - discrete_derivative(s.f, Dir::z) / s.f * psi_m;
    um.require_finite("u^m");
    fm.require_finite("f^m");
    return {std::move(um), std::move(fm)};
}

ScalarField2D recover_ux(const ScalarField2D& directional, const ScalarField2D& omega, const MonotonicityGuard& guard) {
    guard.require("recover_ux");
    ScalarField2D integrand = directional / (omega * omega);
    ScalarField2D out = -(omega * num::integrate_from_wall(integrand));
    for (std::size_t i = 0; i < out.nx(); ++i) out(i, 0) = 0.0;
    out.require_finite("recover_ux");
    return out;
}

} // namespace cancelfield::cancel
