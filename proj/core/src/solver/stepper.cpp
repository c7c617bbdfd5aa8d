#include "cancelfield/solver/stepper.hpp"

#include "cancelfield/error.hpp"
#include "cancelfield/numerics/stencils.hpp"
#include "cancelfield/numerics/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cancelfield::solver {

using num::Dir;
using num::Grid2D;

std::string_view to_string(Scheme s) noexcept { return s == Scheme::upwind1 ? "upwind1" : "central2"; }

std::optional<Scheme> scheme_from_string(std::string_view s) noexcept {
    if (s == "upwind1") return Scheme::upwind1;
    if (s == "central2") return Scheme::central2;
    return std::nullopt;
}

SourceFn pointwise_source(std::function<double(double, double, double)> fn) {
    return [fn = std::move(fn)](double t, const Grid2D& g) {
        return ScalarField2D::sample(g, [&](double x, double z) { return fn(t, x, z); });
    };
}

namespace {

void impose_velocity_bc(ScalarField2D& u, const OuterFlow& outer, double t) {
    const auto& g = u.grid();
    for (std::size_t i = 0; i < g.nx(); ++i) {
        u(i, 0) = 0.0;
        u(i, g.nz() - 1) = outer.uE(t, g.x(i));
    }
}

void impose_lid(ScalarField2D& f, const TraceFn& trace, double t) {
    const auto& g = f.grid();
    for (std::size_t i = 0; i < g.nx(); ++i) f(i, g.nz() - 1) = trace(t, g.x(i));
}

// a·∂_x q + b·∂_z q. Upwind picks the one-sided difference against the sign
// of the advector; rows without a lower (upper) neighbour fall back to the
// forward (backward) difference.
ScalarField2D advect(const ScalarField2D& a, const ScalarField2D& b, const ScalarField2D& q, Scheme scheme) {
    const Grid2D& g = q.grid();
    if (scheme == Scheme::central2) {
        return a * num::discrete_derivative(q, Dir::x) + b * num::discrete_derivative(q, Dir::z);
    }
    const std::size_t nx = g.nx(), nz = g.nz();
    const double idx = 1.0 / g.dx(), idz = 1.0 / g.dz();
    ScalarField2D out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t ip = (i + 1) % nx, im = (i + nx - 1) % nx;
        for (std::size_t k = 0; k < nz; ++k) {
            const double ai = a(i, k), bi = b(i, k);
            const double qx = ai >= 0.0 ? (q(i, k) - q(im, k)) * idx : (q(ip, k) - q(i, k)) * idx;
            double qz;
            if (k == 0) {
                qz = (q(i, 1) - q(i, 0)) * idz;
            } else if (k + 1 == nz) {
                qz = (q(i, k) - q(i, k - 1)) * idz;
            } else {
                qz = bi >= 0.0 ? (q(i, k) - q(i, k - 1)) * idz : (q(i, k + 1) - q(i, k)) * idz;
            }
            out(i, k) = ai * qx + bi * qz;
        }
    }
    return out;
}

// Solves (I − dt ν ∂_zz) q = rhs per column. Interior rows use the 3-point
// stencil; the lid row is Dirichlet (value already in rhs); the wall row is
// Dirichlet or, with `neumann_wall`, the mirror-ghost row (1+2r)q0 − 2r q1.
void implicit_diffusion(ScalarField2D& rhs, double nu, double dt, bool neumann_wall) {
    const Grid2D& g = rhs.grid();
    const std::size_t nz = g.nz();
    const double r = nu * dt / (g.dz() * g.dz());
    std::vector<double> a(nz, -r), b(nz, 1.0 + 2.0 * r), c(nz, -r), d(nz), x(nz);
    if (neumann_wall) {
        a[0] = 0.0;
        b[0] = 1.0 + 2.0 * r;
        c[0] = -2.0 * r;
    } else {
        a[0] = 0.0;
        b[0] = 1.0;
        c[0] = 0.0;
    }
    a[nz - 1] = 0.0;
    b[nz - 1] = 1.0;
    c[nz - 1] = 0.0;
    num::TridiagonalSolver solver(nz);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        for (std::size_t k = 0; k < nz; ++k) d[k] = rhs(i, k);
        solver.solve(a, b, c, d, x);
        for (std::size_t k = 0; k < nz; ++k) rhs(i, k) = x[k];
    }
}

void add_source(ScalarField2D& rhs, const SourceFn& src, double t, double dt) {
    if (!src) return;
    ScalarField2D s = src(t, rhs.grid());
    s *= dt;
    rhs += s;
}

void check_finite(const ScalarField2D& f, std::string_view name, std::size_t step, double t) {
    try {
        f.require_finite(name);
    } catch (const NonFinite& e) {
        std::ostringstream os;
        os << "step " << step << " (t=" << t << "): " << e.what();
        throw NonFinite(os.str());
    }
}

double bound_from_speeds(const Grid2D& g, double cfl, double sx, double sz) {
    double b = std::numeric_limits<double>::infinity();
    if (sx > 0.0) b = std::min(b, g.dx() / sx);
    if (sz > 0.0) b = std::min(b, g.dz() / sz);
    return cfl * b;
}

double checked_dt(double bound, const SolverConfig& cfg, std::size_t step_index) {
    if (cfg.dt) {
        const double dt = *cfg.dt;
        if (!(dt > 0.0)) throw CflViolation("fixed dt must be positive");
        if (dt > 1.05 * bound) {
            std::ostringstream os;
            os << "step " << step_index << ": dt=" << dt << " exceeds the CFL bound " << bound << " by more than 5%";
            throw CflViolation(os.str());
        }
        return dt;
    }
    return std::min(bound, cfg.dt_max);
}

} // namespace

PrandtlState make_prandtl_state(ScalarField2D u, OuterFlow outer, double t) {
    impose_velocity_bc(u, outer, t);
    u.require_finite("initial u");
    ScalarField2D w = num::reconstruct_w(u);
    return {t, std::move(u), std::move(w), std::move(outer)};
}

MhdState make_mhd_state(ScalarField2D u, ScalarField2D f, OuterFlow outer, double t) {
    impose_velocity_bc(u, outer, t);
    impose_lid(f, outer.fE, t);
    u.require_finite("initial u");
    f.require_finite("initial f");
    ScalarField2D w = num::reconstruct_w(u);
    auto [psi, h] = num::reconstruct_psi_h(f);
    return {t, std::move(u), std::move(w), std::move(f), std::move(h), std::move(psi), std::move(outer)};
}

double cfl_bound(const PrandtlState& s, const SolverConfig& cfg) {
    return std::min(bound_from_speeds(s.u.grid(), cfg.cfl, s.u.max_abs(), s.w.max_abs()), cfg.dt_max);
}

double cfl_bound(const MhdState& s, const SolverConfig& cfg) {
    return std::min(bound_from_speeds(s.u.grid(), cfg.cfl, s.u.max_abs() + s.f.max_abs(), s.w.max_abs() + s.h.max_abs()),
                    cfg.dt_max);
}

double select_dt(const PrandtlState& s, const SolverConfig& cfg, std::size_t step_index) {
    const double bound = bound_from_speeds(s.u.grid(), cfg.cfl, s.u.max_abs(), s.w.max_abs());
    return checked_dt(bound, cfg, step_index);
}

double select_dt(const MhdState& s, const SolverConfig& cfg, std::size_t step_index) {
    const double bound =
        bound_from_speeds(s.u.grid(), cfg.cfl, s.u.max_abs() + s.f.max_abs(), s.w.max_abs() + s.h.max_abs());
    return checked_dt(bound, cfg, step_index);
}

PrandtlState step_prandtl(const PrandtlState& s, const SolverConfig& cfg, double dt, const Forcing& forcing,
                          std::size_t step_index) {
    const Grid2D& g = s.u.grid();
    const double t1 = s.t + dt;

    ScalarField2D rhs = s.u;
    ScalarField2D adv = advect(s.u, s.w, s.u, cfg.scheme);
    adv *= dt;
    rhs -= adv;
    const auto px = bernoulli_px(s.outer, g, s.t);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        for (std::size_t k = 0; k < g.nz(); ++k) rhs(i, k) -= dt * px[i];
    }
    add_source(rhs, forcing.u, s.t, dt);
    impose_velocity_bc(rhs, s.outer, t1);

    implicit_diffusion(rhs, cfg.mu, dt, false);
    check_finite(rhs, "u", step_index, t1);

    PrandtlState out{t1, std::move(rhs), ScalarField2D(g), s.outer};
    impose_velocity_bc(out.u, out.outer, t1);
    out.w = num::reconstruct_w(out.u);
    check_finite(out.w, "w", step_index, t1);
    return out;
}

MhdState step_mhd(const MhdState& s, const SolverConfig& cfg, double dt, const Forcing& forcing,
                  std::size_t step_index) {
    const Grid2D& g = s.u.grid();
    const double t1 = s.t + dt;

    const ScalarField2D ux = num::discrete_derivative(s.u, Dir::x);
    const ScalarField2D uz = num::discrete_derivative(s.u, Dir::z);
    const ScalarField2D fx = num::discrete_derivative(s.f, Dir::x);
    const ScalarField2D fz = num::discrete_derivative(s.f, Dir::z);

    // u: −(u,w)·∇u + (f,h)·∇f − ∂_xP
    ScalarField2D ru = s.u;
    ScalarField2D tu = s.f * fx + s.h * fz - advect(s.u, s.w, s.u, cfg.scheme);
    tu *= dt;
    ru += tu;
    const auto px = total_pressure_px(s.outer, g, s.t);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        for (std::size_t k = 0; k < g.nz(); ++k) ru(i, k) -= dt * px[i];
    }
    add_source(ru, forcing.u, s.t, dt);
    impose_velocity_bc(ru, s.outer, t1);

    // f: −(u,w)·∇f + (f,h)·∇u
    ScalarField2D rf = s.f;
    ScalarField2D tf = s.f * ux + s.h * uz - advect(s.u, s.w, s.f, cfg.scheme);
    tf *= dt;
    rf += tf;
    add_source(rf, forcing.f, s.t, dt);
    impose_lid(rf, s.outer.fE, t1);

    implicit_diffusion(ru, cfg.mu, dt, false);
    implicit_diffusion(rf, cfg.kappa, dt, true);
    check_finite(ru, "u", step_index, t1);
    check_finite(rf, "f", step_index, t1);

    MhdState out = make_mhd_state(std::move(ru), std::move(rf), s.outer, t1);
    check_finite(out.w, "w", step_index, t1);
    check_finite(out.h, "h", step_index, t1);
    return out;
}

} // namespace cancelfield::solver
