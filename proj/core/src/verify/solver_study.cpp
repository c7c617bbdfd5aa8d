#include "cancelfield/verify/solver_study.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace cancelfield::verify {

using num::ScalarField2D;

namespace {

// The sampler is built on first use for whichever grid the solver runs on.
solver::SourceFn as_source(ClosedForm f) {
    auto sampler = std::make_shared<std::optional<GridSampler>>();
    auto grid = std::make_shared<std::optional<num::Grid2D>>();
    return [f = std::move(f), sampler, grid](double t, const num::Grid2D& g) {
        if (!*grid || !(**grid == g)) {
            *grid = g;
            sampler->emplace(f, g);
        }
        return (*sampler)->at(t);
    };
}

ScalarField2D sample(const ClosedForm& f, const num::Grid2D& g, double t) {
    return ScalarField2D::sample(g, [&](double x, double z) { return f(t, x, z); });
}

} // namespace

solver::Forcing manufactured_forcing(const ManufacturedCase& c) {
    const ClosedForm& u = c.u;
    ClosedForm su = u.dt() + u * u.dx() + c.w * u.dz() - c.mu * u.dz(2) + c.px();
    solver::Forcing out;
    if (c.f) {
        const ClosedForm& f = *c.f;
        su -= f * f.dx() + c.h * f.dz();
        ClosedForm sf = f.dt() + u * f.dx() + c.w * f.dz() - c.kappa * f.dz(2) - (f * u.dx() + c.h * u.dz());
        out.f = as_source(std::move(sf));
    }
    out.u = as_source(std::move(su));
    return out;
}

solver::PrandtlState manufactured_prandtl_state(const ManufacturedCase& c, const num::Grid2D& g, double t) {
    return solver::make_prandtl_state(sample(c.u, g, t), c.outer(), t);
}

solver::MhdState manufactured_mhd_state(const ManufacturedCase& c, const num::Grid2D& g, double t) {
    return solver::make_mhd_state(sample(c.u, g, t), sample(*c.f, g, t), c.outer(), t);
}

TrajectoryError manufactured_trajectory_error(const ManufacturedCase& c, const num::Grid2D& g,
                                              solver::SolverConfig cfg, std::optional<double> band) {
    const double bw = band.value_or(default_band(g));
    auto interior = [bw](const ScalarField2D& e) { return interior_norms(e, bw); };
    cfg.mu = c.mu;
    cfg.kappa = c.kappa;
    solver::RunOptions opts;
    opts.forcing = manufactured_forcing(c);
    TrajectoryError out;
    out.t_end = cfg.t_end;
    if (c.is_mhd()) {
        auto r = solver::run(manufactured_mhd_state(c, g), cfg, opts);
        out.u = interior(r.final_state.u - sample(c.u, g, cfg.t_end));
        out.f = interior(r.final_state.f - sample(*c.f, g, cfg.t_end));
        out.steps = r.steps;
    } else {
        auto r = solver::run(manufactured_prandtl_state(c, g), cfg, opts);
        out.u = interior(r.final_state.u - sample(c.u, g, cfg.t_end));
        out.steps = r.steps;
    }
    return out;
}

ConvergenceReport solver_convergence(const ManufacturedCase& c, const std::vector<num::Grid2D>& grids,
                                     double dt_coeff, double t_end, solver::Scheme scheme) {
    return convergence_order(c.name, grids, [&](const num::Grid2D& g, double band) {
        const double h = std::max(g.dx(), g.dz());
        solver::SolverConfig cfg;
        cfg.dt = dt_coeff * h * h;
        cfg.t_end = t_end;
        cfg.scheme = scheme;
        const auto e = manufactured_trajectory_error(c, g, cfg, band);
        return ErrorNorms{std::max(e.u.max, e.f.max), std::max(e.u.l2, e.f.l2)};
    });
}

} // namespace cancelfield::verify
