#pragma once

#include "cancelfield/solver/run.hpp"
#include "cancelfield/verify/convergence.hpp"
#include "cancelfield/verify/manufactured.hpp"

namespace cancelfield::verify {

/// Residual of the case in the boundary-layer equations, as explicit
/// sources: S_u = P^μ u* + ∂_xP − (f*·∂_x + h*·∂_z) f*, and for MHD
/// S_f = P^κ f* − (f*·∂_x + h*·∂_z) u*.
solver::Forcing manufactured_forcing(const ManufacturedCase& c);

/// Initial state sampled from the case at t (MHD iff the case has f*).
solver::PrandtlState manufactured_prandtl_state(const ManufacturedCase& c, const num::Grid2D& g, double t = 0.0);
solver::MhdState manufactured_mhd_state(const ManufacturedCase& c, const num::Grid2D& g, double t = 0.0);

struct TrajectoryError {
    ErrorNorms u;
    ErrorNorms f; // zero for Prandtl cases
    std::size_t steps{0};
    double t_end{0.0};
};

/// Runs the forced problem from t = 0 to cfg.t_end and compares with the
/// case at t_end over band ≤ z ≤ Z − band (default: default_band(g)).
/// cfg.mu/kappa are taken from the case.
TrajectoryError manufactured_trajectory_error(const ManufacturedCase& c, const num::Grid2D& g,
                                              solver::SolverConfig cfg, std::optional<double> band = std::nullopt);

/// Order study with dt = dt_coeff · h², h = max(dx, dz). The fitted error
/// is max(err_u, err_f).
ConvergenceReport solver_convergence(const ManufacturedCase& c, const std::vector<num::Grid2D>& grids,
                                     double dt_coeff, double t_end, solver::Scheme scheme);

} // namespace cancelfield::verify
