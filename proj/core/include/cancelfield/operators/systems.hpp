#pragma once

#include "cancelfield/jetalg/rewrite.hpp"

namespace cancelfield::ops {

using jet::RewriteSystem;

// Rule names shared by the systems below (used by RewriteSystem::without).
inline constexpr const char* kRuleMomentum = "momentum";     // u_t -> ...
inline constexpr const char* kRuleDivergence = "divergence"; // w_z -> -u_x
inline constexpr const char* kRulePressure = "pressure";     // pE_z -> 0

/// 2D Prandtl: u_t -> μu_zz − u u_x − w u_z − pE_x, w_z -> −u_x, pE_z -> 0.
RewriteSystem prandtl_system();

/// Divergence constraint only.
RewriteSystem divergence_system();

/// Divergence plus the cancellation-field hypothesis P^μΘ = (Θ·∇)u for
/// free components θ₁, θ₂.
RewriteSystem lemma_system();

/// MHD boundary layer in stream-function form: f -> ψ_z, h -> −ψ_x,
/// ψ_t -> −uψ_x − wψ_z + κψ_zz, the momentum equation, divergence, pressure.
RewriteSystem mhd_stream_system();

/// MHD boundary layer in field form: both evolution equations for (u, f),
/// w_z -> −u_x, h_z -> −f_x, ψ_z -> f, ψ_x -> −h, pressure. No ψ_t rule.
RewriteSystem mhd_field_system();

/// Eliminates time derivatives only, keeping w, h, ψ as independent
/// spatial fields. Used when identities are evaluated on discrete fields:
/// u_t from momentum, w_tz -> −u_tx, pE_z -> 0.
RewriteSystem prandtl_time_system();

/// MHD analogue: u_t (with f, h), ψ_t -> −uψ_x − wψ_z + κψ_zz,
/// f_t -> ψ_tz, h_t -> −ψ_tx, w_tz -> −u_tx, pE_z -> 0.
RewriteSystem mhd_time_system();

} // namespace cancelfield::ops
