#pragma once

#include "cancelfield/numerics/grid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cancelfield::solver {

using TraceFn = std::function<double(double t, double x)>;

/// Outer traces u^E(t,x), f^E(t,x) with their exact t- and x-derivatives.
/// Presets cover the closed forms reachable from config files; manufactured
/// cases build one directly.
struct OuterFlow {
    std::string name{"zero"};
    TraceFn uE{[](double, double) { return 0.0; }};
    TraceFn uE_t{[](double, double) { return 0.0; }};
    TraceFn uE_x{[](double, double) { return 0.0; }};
    TraceFn fE{[](double, double) { return 0.0; }};
    TraceFn fE_x{[](double, double) { return 0.0; }};

    static OuterFlow zero();
    /// u^E = U, f^E = F.
    static OuterFlow uniform(double U, double F = 0.0);
    /// u^E = U + a sin x, f^E = F.
    static OuterFlow steady_sine(double a, double U = 0.0, double F = 0.0);
    /// u^E = U + a e^{−γt} sin x, f^E = F.
    static OuterFlow decaying_sine(double a, double gamma, double U = 0.0, double F = 0.0);
};

/// ∂_x p^E = −∂_t u^E − u^E ∂_x u^E on the x-grid.
std::vector<double> bernoulli_px(const OuterFlow& outer, const num::Grid2D& g, double t);

/// MHD total pressure ∂_x P = −∂_t u^E − u^E ∂_x u^E + f^E ∂_x f^E.
std::vector<double> total_pressure_px(const OuterFlow& outer, const num::Grid2D& g, double t);

} // namespace cancelfield::solver
