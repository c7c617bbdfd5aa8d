#include "cancelfield/numerics/stencils.hpp"

#include "cancelfield/error.hpp"

namespace cancelfield::num {

namespace {

ScalarField2D dx1(const ScalarField2D& s) {
    const auto& g = s.grid();
    const std::size_t nx = g.nx(), nz = g.nz();
    const double c = 1.0 / (2.0 * g.dx());
    ScalarField2D out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t ip = (i + 1) % nx, im = (i + nx - 1) % nx;
        for (std::size_t k = 0; k < nz; ++k) out(i, k) = (s(ip, k) - s(im, k)) * c;
    }
    return out;
}

ScalarField2D dx2(const ScalarField2D& s) {
    const auto& g = s.grid();
    const std::size_t nx = g.nx(), nz = g.nz();
    const double c = 1.0 / (g.dx() * g.dx());
    ScalarField2D out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t ip = (i + 1) % nx, im = (i + nx - 1) % nx;
        for (std::size_t k = 0; k < nz; ++k) out(i, k) = (s(ip, k) - 2.0 * s(i, k) + s(im, k)) * c;
    }
    return out;
}

ScalarField2D dz1(const ScalarField2D& s) {
    const auto& g = s.grid();
    const std::size_t nx = g.nx(), nz = g.nz();
    const double c = 1.0 / (2.0 * g.dz());
    ScalarField2D out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        out(i, 0) = (-3.0 * s(i, 0) + 4.0 * s(i, 1) - s(i, 2)) * c;
        for (std::size_t k = 1; k + 1 < nz; ++k) out(i, k) = (s(i, k + 1) - s(i, k - 1)) * c;
        const std::size_t n = nz - 1;
        out(i, n) = (3.0 * s(i, n) - 4.0 * s(i, n - 1) + s(i, n - 2)) * c;
    }
    return out;
}

ScalarField2D dz2(const ScalarField2D& s) {
    const auto& g = s.grid();
    const std::size_t nx = g.nx(), nz = g.nz();
    const double c = 1.0 / (g.dz() * g.dz());
    ScalarField2D out(g);
    for (std::size_t i = 0; i < nx; ++i) {
        out(i, 0) = (2.0 * s(i, 0) - 5.0 * s(i, 1) + 4.0 * s(i, 2) - s(i, 3)) * c;
        for (std::size_t k = 1; k + 1 < nz; ++k) out(i, k) = (s(i, k + 1) - 2.0 * s(i, k) + s(i, k - 1)) * c;
        const std::size_t n = nz - 1;
        out(i, n) = (2.0 * s(i, n) - 5.0 * s(i, n - 1) + 4.0 * s(i, n - 2) - s(i, n - 3)) * c;
    }
    return out;
}

} // namespace

ScalarField2D discrete_derivative(const ScalarField2D& s, Dir axis, int order) {
    if (order != 1 && order != 2) throw Error("discrete_derivative: order must be 1 or 2");
    ScalarField2D out = axis == Dir::x ? (order == 1 ? dx1(s) : dx2(s)) : (order == 1 ? dz1(s) : dz2(s));
    out.require_finite("discrete_derivative");
    return out;
}

ScalarField2D repeated_x_derivative(const ScalarField2D& s, unsigned times) {
    ScalarField2D out = s;
    for (unsigned n = 0; n < times; ++n) out = dx1(out);
    out.require_finite("repeated_x_derivative");
    return out;
}

ScalarField2D integrate_from_wall(const ScalarField2D& s) {
    const auto& g = s.grid();
    ScalarField2D out(g);
    const double half = 0.5 * g.dz();
    for (std::size_t i = 0; i < g.nx(); ++i) {
        double acc = 0.0;
        out(i, 0) = 0.0;
        for (std::size_t k = 1; k < g.nz(); ++k) {
            acc += half * (s(i, k - 1) + s(i, k));
            out(i, k) = acc;
        }
    }
    out.require_finite("integrate_from_wall");
    return out;
}

ScalarField2D reconstruct_w(const ScalarField2D& u) {
    ScalarField2D w = integrate_from_wall(dx1(u));
    w *= -1.0;
    return w;
}

PsiH reconstruct_psi_h(const ScalarField2D& f) {
    ScalarField2D psi = integrate_from_wall(f);
    ScalarField2D h = dx1(psi);
    h *= -1.0;
    h.require_finite("reconstruct_psi_h");
    return {std::move(psi), std::move(h)};
}

} // namespace cancelfield::num
