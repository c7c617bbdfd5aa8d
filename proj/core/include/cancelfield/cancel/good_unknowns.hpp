#pragma once

#include "cancelfield/cancel/guard.hpp"
#include "cancelfield/solver/stepper.hpp"

namespace cancelfield::cancel {

struct FieldPair {
    ScalarField2D first;
    ScalarField2D second;
};

/// ω = ∂_z u.
ScalarField2D vorticity(const ScalarField2D& u);

/// g₁ = ∂_z(∂_x u / ω).
ScalarField2D good_unknown_g1(const ScalarField2D& u, const MonotonicityGuard& guard);

/// f₁ = ω_x − (ω_z/ω) u_x.
ScalarField2D good_unknown_f1(const ScalarField2D& u, const MonotonicityGuard& guard);

/// θ₁ ∂_x target + θ₂ ∂_z target.
ScalarField2D directional_derivative(const ScalarField2D& theta1, const ScalarField2D& theta2,
                                     const ScalarField2D& target);

/// Θ = (∂_z²u, ∂_z²w) with w reconstructed from u.
FieldPair classical_theta(const ScalarField2D& u);

/// (u^m, f^m) with u^m = ∂_x^m u − (u_z/f) ∂_x^m ψ and the f analogue.
FieldPair good_unknown_m(const solver::MhdState& s, unsigned m, const NonVanishingGuard& f_guard);

/// u_x = −ω ∫₀^z directional/ω² dz′; the wall row is exactly 0.
ScalarField2D recover_ux(const ScalarField2D& directional, const ScalarField2D& omega, const MonotonicityGuard& guard);

} // namespace cancelfield::cancel
