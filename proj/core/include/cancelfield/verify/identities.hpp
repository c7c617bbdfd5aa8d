#pragma once

#include "cancelfield/numerics/field.hpp"
#include "cancelfield/verify/manufactured.hpp"

#include <optional>
#include <string_view>

namespace cancelfield::verify {

enum class Identity { theta_uzz, f1_g1, directional_g1, mhd_theta_h, mhd_f_u1, recovery };

std::string_view identity_name(Identity id) noexcept;
std::optional<Identity> identity_from_name(std::string_view name) noexcept;
bool identity_is_mhd(Identity id) noexcept;

/// discrete: both sides through the grid operators. exact: both sides from
/// closed-form derivatives, so only roundoff remains.
enum class Evaluation { discrete, exact };

/// Default width, in rows, of the band next to z = 0 and z = Z left out of
/// residual norms.
inline constexpr std::size_t kBoundaryMargin = 3;

struct ErrorNorms {
    double max{0.0};
    double l2{0.0}; // root mean square over the same rows
};

/// kBoundaryMargin · dz.
double default_band(const num::Grid2D& g) noexcept;

/// Norms over rows with band ≤ z ≤ Z − band. Convergence studies pass the
/// band of their coarsest grid so every level sees the same region.
ErrorNorms interior_norms(const num::ScalarField2D& r, double band);

/// Residual of `id` on the case at time t. theta_uzz and mhd_theta_h have
/// their ∂_t-jets replaced through the evolution equations before sampling.
/// recovery has no exact mode (it contains a quadrature) and throws Error.
/// f1_g1 and mhd_f_u1 compare each discrete side with the exact common value:
/// on separable exponential profiles the two discrete sides agree to
/// roundoff, which would hide the discretization order.
ErrorNorms manufactured_residual(const ManufacturedCase& c, Identity id, const num::Grid2D& g,
                                 Evaluation mode = Evaluation::discrete, double t = 0.0,
                                 std::optional<double> band = std::nullopt);

} // namespace cancelfield::verify
