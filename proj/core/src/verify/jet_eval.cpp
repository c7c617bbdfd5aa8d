#include "cancelfield/verify/jet_eval.hpp"

#include "cancelfield/error.hpp"
#include "cancelfield/numerics/stencils.hpp"

#include <cmath>

namespace cancelfield::verify {

using jet::Base;
using num::Dir;

const ScalarField2D& JetSource::jet(const JetVar& j) {
    if (j.has_time()) throw TimeJetPresent("cannot sample time jet " + jet::to_string(j) + " on a grid");
    auto it = cache_.find(j);
    if (it == cache_.end()) it = cache_.emplace(j, compute(j)).first;
    return it->second;
}

namespace {

ScalarField2D sample(const ClosedForm& f, const Grid2D& g, double t) {
    return ScalarField2D::sample(g, [&](double x, double z) { return f(t, x, z); });
}

ScalarField2D pressure_jet(const ClosedForm& px, const JetVar& j, const Grid2D& g, double t) {
    if (j.dz > 0) return ScalarField2D(g);
    if (j.dx == 0) throw Error("p^E itself is not defined; only its x-derivatives are");
    return sample(px.dx(j.dx - 1), g, t);
}

ScalarField2D z_field(const JetVar& j, const Grid2D& g) {
    if (j.dx > 0 || j.dz > 1) return ScalarField2D(g);
    if (j.dz == 1) return ScalarField2D(g, 1.0);
    return ScalarField2D::sample(g, [](double, double z) { return z; });
}

[[noreturn]] void unknown(const JetVar& j) {
    throw Error("no grid values for jet " + jet::to_string(j));
}

} // namespace

ClosedFormJets::ClosedFormJets(const ManufacturedCase& c, const Grid2D& g, double t, std::optional<ClosedForm> test)
    : case_(c), grid_(g), t_(t), test_(std::move(test)), px_(c.px()) {}

ScalarField2D ClosedFormJets::compute(const JetVar& j) {
    const ClosedForm* f = nullptr;
    switch (j.base) {
    case Base::u: f = &case_.u; break;
    case Base::w: f = &case_.w; break;
    case Base::f:
        if (!case_.f) unknown(j);
        f = &*case_.f;
        break;
    case Base::h: f = &case_.h; break;
    case Base::psi: f = &case_.psi; break;
    case Base::test:
        if (!test_) unknown(j);
        f = &*test_;
        break;
    case Base::pE: return pressure_jet(px_, j, grid_, t_);
    case Base::zcoord: return z_field(j, grid_);
    default: unknown(j);
    }
    return sample(f->derivative(0, j.dx, j.dz), grid_, t_);
}

DiscreteJets::DiscreteJets(const ManufacturedCase& c, const Grid2D& g, double t, std::optional<ClosedForm> test)
    : case_(c), grid_(g), t_(t), test_(std::move(test)), px_(c.px()) {
    ScalarField2D u = sample(c.u, g, t);
    base_.emplace(Base::w, num::reconstruct_w(u));
    base_.emplace(Base::u, std::move(u));
    if (c.f) {
        ScalarField2D f = sample(*c.f, g, t);
        auto [psi, h] = num::reconstruct_psi_h(f);
        base_.emplace(Base::f, std::move(f));
        base_.emplace(Base::psi, std::move(psi));
        base_.emplace(Base::h, std::move(h));
    }
}

ScalarField2D DiscreteJets::compute(const JetVar& j) {
    switch (j.base) {
    case Base::pE: return pressure_jet(px_, j, grid_, t_);
    case Base::zcoord: return z_field(j, grid_);
    case Base::test:
        if (!test_) unknown(j);
        return sample(test_->derivative(0, j.dx, j.dz), grid_, t_);
    default: break;
    }
    if (j.dx == 0 && j.dz == 0) {
        auto it = base_.find(j.base);
        if (it == base_.end()) unknown(j);
        return it->second;
    }
    // Peel z-derivatives first, two at a time where possible.
    if (j.dz >= 2) return num::discrete_derivative(jet(jet::jv(j.base, 0, j.dx, j.dz - 2)), Dir::z, 2);
    if (j.dz == 1) return num::discrete_derivative(jet(jet::jv(j.base, 0, j.dx, 0)), Dir::z, 1);
    if (j.dx >= 2) return num::discrete_derivative(jet(jet::jv(j.base, 0, j.dx - 2, 0)), Dir::x, 2);
    return num::discrete_derivative(jet(jet::jv(j.base, 0, 0, 0)), Dir::x, 1);
}

ScalarField2D evaluate(const DiffExpr& e, JetSource& src) {
    const Grid2D& g = src.grid();
    ScalarField2D out(g);
    for (const auto& [m, coef] : e.terms()) {
        double c = coef.convert_to<double>();
        c *= std::pow(src.mu(), m.mu()) * std::pow(src.kappa(), m.kappa());
        ScalarField2D term(g, c);
        for (const auto& [j, p] : m.factors()) {
            const ScalarField2D& v = src.jet(j);
            for (std::uint32_t r = 0; r < p; ++r) term *= v;
        }
        out += term;
    }
    out.require_finite("evaluate");
    return out;
}

} // namespace cancelfield::verify
