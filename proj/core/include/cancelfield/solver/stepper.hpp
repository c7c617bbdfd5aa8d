#pragma once

#include "cancelfield/numerics/field.hpp"
#include "cancelfield/solver/outer_flow.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace cancelfield::solver {

using num::ScalarField2D;

enum class Scheme { upwind1, central2 };

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> scheme_from_string(std::string_view s) noexcept;

struct SolverConfig {
    double mu{1.0};
    double kappa{1.0};
    std::optional<double> dt; // nullopt: auto
    double cfl{0.5};
    double dt_max{1e-2};
    Scheme scheme{Scheme::upwind1};
    double t_end{1.0};
};

/// Explicit source S(t, ·) sampled on the grid, added to the right-hand
/// side at t^n.
using SourceFn = std::function<ScalarField2D(double t, const num::Grid2D& g)>;

/// Wraps a pointwise S(t, x, z).
SourceFn pointwise_source(std::function<double(double t, double x, double z)> fn);

struct Forcing {
    SourceFn u;
    SourceFn f;
};

struct PrandtlState {
    double t{0.0};
    ScalarField2D u;
    ScalarField2D w;
    OuterFlow outer;
};

struct MhdState {
    double t{0.0};
    ScalarField2D u;
    ScalarField2D w;
    ScalarField2D f;
    ScalarField2D h;
    ScalarField2D psi;
    OuterFlow outer;
};

/// Imposes u = 0 at the wall and u = u^E at the lid, then reconstructs w.
PrandtlState make_prandtl_state(ScalarField2D u, OuterFlow outer, double t = 0.0);
/// As above for u; f gets f = f^E at the lid, and ψ, h are reconstructed.
MhdState make_mhd_state(ScalarField2D u, ScalarField2D f, OuterFlow outer, double t = 0.0);

/// cfl · min(dx/speed_x, dz/speed_z), capped at dt_max. For MHD the speeds
/// add max|f| and max|h| to max|u| and max|w|.
double cfl_bound(const PrandtlState& s, const SolverConfig& cfg);
double cfl_bound(const MhdState& s, const SolverConfig& cfg);

/// The step size to use: cfg.dt if fixed (CflViolation past 1.05× the
/// uncapped bound), otherwise the capped auto bound.
double select_dt(const PrandtlState& s, const SolverConfig& cfg, std::size_t step_index = 0);
double select_dt(const MhdState& s, const SolverConfig& cfg, std::size_t step_index = 0);

/// One IMEX step of size dt: explicit advection, pressure and sources;
/// implicit μ∂_z² per column.
PrandtlState step_prandtl(const PrandtlState& s, const SolverConfig& cfg, double dt, const Forcing& forcing = {},
                          std::size_t step_index = 0);

/// Coupled (u, f) step; f has a Neumann wall row.
MhdState step_mhd(const MhdState& s, const SolverConfig& cfg, double dt, const Forcing& forcing = {},
                  std::size_t step_index = 0);

} // namespace cancelfield::solver
