#include "cancelfield/verify/convergence.hpp"

#include "cancelfield/error.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <cmath>

namespace cancelfield::verify {

OrderFit fit_order(const std::vector<double>& h, const std::vector<double>& err) {
    const std::size_t n = h.size();
    if (n != err.size()) throw Error("fit_order: h and err differ in length");
    if (n < 3) throw InsufficientGrids("order fit needs at least 3 grids, got " + std::to_string(n));
    std::vector<double> X(n), Y(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(h[i] > 0.0) || !(err[i] > 0.0)) throw Error("fit_order: h and err must be positive");
        X[i] = std::log(h[i]);
        Y[i] = std::log(err[i]);
    }
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += X[i];
        my += Y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (X[i] - mx) * (X[i] - mx);
        sxy += (X[i] - mx) * (Y[i] - my);
    }
    if (sxx == 0.0) throw Error("fit_order: all h are equal");
    OrderFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = Y[i] - (f.intercept + f.slope * X[i]);
        ss += r * r;
    }
    f.residual_rms = std::sqrt(ss / static_cast<double>(n));
    const double dof = static_cast<double>(n - 2);
    const double se = std::sqrt(ss / dof / sxx);
    const boost::math::students_t dist(dof);
    f.ci_half_width = boost::math::quantile(boost::math::complement(dist, 0.025)) * se;
    return f;
}

std::vector<num::Grid2D> doubling_grids(const std::vector<std::size_t>& Ns, double Z) {
    std::vector<num::Grid2D> out;
    out.reserve(Ns.size());
    for (auto N : Ns) out.emplace_back(N, N + 1, Z);
    return out;
}

bool refines_by_two(const std::vector<num::Grid2D>& grids) noexcept {
    for (std::size_t i = 1; i < grids.size(); ++i) {
        const auto& a = grids[i - 1];
        const auto& b = grids[i];
        if (b.nx() != 2 * a.nx() || b.nz() - 1 != 2 * (a.nz() - 1) || b.Z() != a.Z()) return false;
    }
    return true;
}

ConvergenceReport convergence_order(std::string name, const std::vector<num::Grid2D>& grids, const ErrorOnGrid& error) {
    if (grids.size() < 3) {
        throw InsufficientGrids("convergence study needs at least 3 grids, got " + std::to_string(grids.size()));
    }
    ConvergenceReport r;
    r.name = std::move(name);
    r.refines_by_two = refines_by_two(grids);
    if (!r.refines_by_two) throw InvalidGrid("convergence grids must refine by exactly 2x in each axis");
    const double band = default_band(grids.front());
    std::vector<double> hs, es;
    for (const auto& g : grids) {
        const ErrorNorms e = error(g, band);
        const double h = std::max(g.dx(), g.dz());
        r.levels.push_back({g.nx(), g.nz(), h, e.max, e.l2});
        hs.push_back(h);
        es.push_back(e.max);
    }
    const OrderFit f = fit_order(hs, es);
    r.order = f.slope;
    r.ci_low = f.slope - f.ci_half_width;
    r.ci_high = f.slope + f.ci_half_width;
    r.fit_residual = f.residual_rms;
    return r;
}

ConvergenceReport convergence_order(const ManufacturedCase& c, Identity id, const std::vector<num::Grid2D>& grids) {
    return convergence_order(std::string(identity_name(id)), grids,
                             [&](const num::Grid2D& g, double band) {
        return manufactured_residual(c, id, g, Evaluation::discrete, 0.0, band);
    });
}

} // namespace cancelfield::verify
