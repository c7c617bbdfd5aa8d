#pragma once

#include "cancelfield/numerics/grid.hpp"
#include "cancelfield/verify/identities.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cancelfield::verify {

struct ConvergenceLevel {
    std::size_t nx{0};
    std::size_t nz{0};
    double h{0.0}; // max(dx, dz)
    double err_max{0.0};
    double err_l2{0.0};
};

struct ConvergenceReport {
    std::string name;
    std::vector<ConvergenceLevel> levels;
    double order{0.0};     // slope of log(err_max) against log(h)
    double ci_low{0.0};    // 95% interval on the slope
    double ci_high{0.0};
    double fit_residual{0.0}; // RMS of the log-space residuals
    bool refines_by_two{false};

    bool order_within(double lo, double hi) const noexcept { return order >= lo && order <= hi; }
};

struct OrderFit {
    double slope{0.0};
    double intercept{0.0};
    double ci_half_width{0.0};
    double residual_rms{0.0};
};

/// Least squares log(err) = p log(h) + c; the interval uses Student's t
/// with n − 2 degrees of freedom. Throws InsufficientGrids for n < 3.
OrderFit fit_order(const std::vector<double>& h, const std::vector<double>& err);

/// Grids with nx = N, nz = N + 1 for each N, so dx and dz both halve
/// when N doubles.
std::vector<num::Grid2D> doubling_grids(const std::vector<std::size_t>& Ns, double Z = 10.0);

/// True iff every successive grid has twice the x points and twice the
/// z intervals of its predecessor.
bool refines_by_two(const std::vector<num::Grid2D>& grids) noexcept;

/// Error norms on a grid, restricted to band ≤ z ≤ Z − band.
using ErrorOnGrid = std::function<ErrorNorms(const num::Grid2D& g, double band)>;

/// Evaluates `error` on every grid with the coarsest grid's default band
/// and fits the order. Throws
/// InsufficientGrids for fewer than 3 grids and InvalidGrid if the sequence
/// does not refine by exactly 2×.
ConvergenceReport convergence_order(std::string name, const std::vector<num::Grid2D>& grids, const ErrorOnGrid& error);

/// Identity residual study on a manufactured case.
ConvergenceReport convergence_order(const ManufacturedCase& c, Identity id, const std::vector<num::Grid2D>& grids);

} // namespace cancelfield::verify
