#pragma once

#include "cancelfield/jetalg/diff_expr.hpp"

#include <map>

namespace cancelfield::ops {

using jet::DiffExpr;

enum class Diffusivity { mu, kappa };

/// ∂_t + a_x ∂_x + a_z ∂_z − ν ∂_z², ν ∈ {μ, κ}.
struct TransportDiffusionOp {
    DiffExpr adv_x;
    DiffExpr adv_z;
    Diffusivity diffusivity{Diffusivity::mu};

    /// P^μ with advectors (u, w).
    static TransportDiffusionOp prandtl();
    /// P^κ with advectors (u, w), the operator of the induction equation.
    static TransportDiffusionOp magnetic();

    DiffExpr parameter() const;
};

/// ∂_t e + a_x ∂_x e + a_z ∂_z e − ν ∂_z² e, unreduced.
DiffExpr apply_operator(const TransportDiffusionOp& op, const DiffExpr& e);

/// Θ = (θ₁, θ₂). Construction rejects components carrying an x-derivative
/// of u or w.
class CancellationField {
public:
    CancellationField(DiffExpr theta1, DiffExpr theta2);

    /// Θ = (theta1, theta2) as free base fields.
    static CancellationField generic();
    /// Θ = u_zz = (u_zz, w_zz).
    static CancellationField velocity_zz();
    /// Θ = h = (f, h) written through the stream function, (ψ_z, −ψ_x).
    static CancellationField magnetic();

    const DiffExpr& theta1() const noexcept { return theta1_; }
    const DiffExpr& theta2() const noexcept { return theta2_; }

private:
    DiffExpr theta1_;
    DiffExpr theta2_;
};

/// Θ·∇e.
DiffExpr directional(const CancellationField& theta, const DiffExpr& e);

/// First variation of `q` at a background state: every jet of a base in
/// `perturbed` is split as background + perturbation and the part linear in
/// the perturbation is returned. Map: perturbed base -> background base.
DiffExpr linearize(const DiffExpr& q, const std::map<jet::Base, jet::Base>& perturbed);

enum class Background {
    generic, // (ũ, w̃) free
    zero,    // (0, 0)
    shear,   // (ũ(z), 0): no t or x dependence, no normal velocity
};

struct LinearizedEquation {
    DiffExpr equation;  // left side minus right side, = 0
    DiffExpr loss_term; // w ∂_z ũ, the term carrying the lost tangential derivative
    bool loss_present{false};
};

/// Linearization of u_t + u u_x + w u_z − μ u_zz around (ũ, w̃) with source S.
LinearizedEquation linearize_prandtl(Background background);

} // namespace cancelfield::ops
