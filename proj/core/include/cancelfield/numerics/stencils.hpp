#pragma once

#include "cancelfield/numerics/field.hpp"

#include <utility>

namespace cancelfield::num {

enum class Dir { x, z };

/// Second-order central differences; periodic wrap in x, second-order
/// one-sided rows at z = 0 and z = Z. order ∈ {1, 2}.
ScalarField2D discrete_derivative(const ScalarField2D& s, Dir axis, int order = 1);

/// `times` successive applications of the first-derivative x stencil.
ScalarField2D repeated_x_derivative(const ScalarField2D& s, unsigned times);

/// Cumulative trapezoid ∫₀^z s dz′ per column; row 0 is exactly 0.
ScalarField2D integrate_from_wall(const ScalarField2D& s);

/// w = −∫₀^z ∂_x u dz′.
ScalarField2D reconstruct_w(const ScalarField2D& u);

struct PsiH {
    ScalarField2D psi;
    ScalarField2D h;
};

/// ψ = ∫₀^z f dz′, h = −∂_x ψ.
PsiH reconstruct_psi_h(const ScalarField2D& f);

} // namespace cancelfield::num
