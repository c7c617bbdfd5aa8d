#include "cancelfield/solver/outer_flow.hpp"

#include <cmath>

namespace cancelfield::solver {

OuterFlow OuterFlow::zero() { return {}; }

OuterFlow OuterFlow::uniform(double U, double F) {
    OuterFlow o;
    o.name = "uniform";
    o.uE = [U](double, double) { return U; };
    o.fE = [F](double, double) { return F; };
    return o;
}

OuterFlow OuterFlow::steady_sine(double a, double U, double F) {
    OuterFlow o;
    o.name = "steady_sine";
    o.uE = [a, U](double, double x) { return U + a * std::sin(x); };
    o.uE_x = [a](double, double x) { return a * std::cos(x); };
    o.fE = [F](double, double) { return F; };
    return o;
}

OuterFlow OuterFlow::decaying_sine(double a, double gamma, double U, double F) {
    OuterFlow o;
    o.name = "decaying_sine";
    o.uE = [=](double t, double x) { return U + a * std::exp(-gamma * t) * std::sin(x); };
    o.uE_t = [=](double t, double x) { return -gamma * a * std::exp(-gamma * t) * std::sin(x); };
    o.uE_x = [=](double t, double x) { return a * std::exp(-gamma * t) * std::cos(x); };
    o.fE = [F](double, double) { return F; };
    return o;
}

std::vector<double> bernoulli_px(const OuterFlow& outer, const num::Grid2D& g, double t) {
    std::vector<double> px(g.nx());
    for (std::size_t i = 0; i < g.nx(); ++i) {
        const double x = g.x(i);
        px[i] = -outer.uE_t(t, x) - outer.uE(t, x) * outer.uE_x(t, x);
    }
    return px;
}

std::vector<double> total_pressure_px(const OuterFlow& outer, const num::Grid2D& g, double t) {
    std::vector<double> px = bernoulli_px(outer, g, t);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        const double x = g.x(i);
        px[i] += outer.fE(t, x) * outer.fE_x(t, x);
    }
    return px;
}

} // namespace cancelfield::solver
