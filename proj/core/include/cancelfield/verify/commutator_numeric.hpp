#pragma once

#include "cancelfield/numerics/grid.hpp"
#include "cancelfield/verify/manufactured.hpp"

#include <optional>
#include <string_view>

namespace cancelfield::verify {

/// classical_uzz: Θ = (u_zz, w_zz) under P^μ. mhd_h: Θ = (f, h) under P^κ.
/// unit_x: Θ = (1, 0), the negative control. zero: Θ = 0.
enum class ThetaChoice { classical_uzz, mhd_h, unit_x, zero };

std::string_view theta_name(ThetaChoice c) noexcept;
std::optional<ThetaChoice> theta_from_name(std::string_view name) noexcept;

/// z (1 + 0.5 cos x).
ClosedForm standard_test_field();

/// L∞ over interior rows of the two members of the w_x-bearing pair in
/// [P, Θ·∇]test, and of their sum:
///   transported = ((PΘ)₂ − θ₂ w_z) test_z, with (PΘ)₂ time-eliminated,
///   bracket     = −θ₁ w_x test_z.
struct CommutatorNorms {
    double transported{0.0};
    double bracket{0.0};
    double sum{0.0};
};

CommutatorNorms commutator_residual_numeric(const ManufacturedCase& c, ThetaChoice theta, const ClosedForm& test,
                                            const num::Grid2D& g, double t = 0.0,
                                            std::optional<double> band = std::nullopt);

} // namespace cancelfield::verify
