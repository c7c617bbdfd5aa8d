#include "cancelfield/operators/transport_op.hpp"

#include "cancelfield/error.hpp"

namespace cancelfield::ops {

using jet::Axis;
using jet::Base;
using jet::differentiate;
using jet::JetVar;

TransportDiffusionOp TransportDiffusionOp::prandtl() {
    return {DiffExpr::jet(Base::u), DiffExpr::jet(Base::w), Diffusivity::mu};
}

TransportDiffusionOp TransportDiffusionOp::magnetic() {
    return {DiffExpr::jet(Base::u), DiffExpr::jet(Base::w), Diffusivity::kappa};
}

DiffExpr TransportDiffusionOp::parameter() const {
    return diffusivity == Diffusivity::mu ? DiffExpr::mu() : DiffExpr::kappa();
}

DiffExpr apply_operator(const TransportDiffusionOp& op, const DiffExpr& e) {
    DiffExpr r = differentiate(e, Axis::t);
    r += op.adv_x * differentiate(e, Axis::x);
    r += op.adv_z * differentiate(e, Axis::z);
    r -= op.parameter() * differentiate(e, Axis::z, 2);
    return r;
}

CancellationField::CancellationField(DiffExpr theta1, DiffExpr theta2)
    : theta1_(std::move(theta1)), theta2_(std::move(theta2)) {
    auto tangential = [](const JetVar& j) { return (j.base == Base::u || j.base == Base::w) && j.dx > 0; };
    if (theta1_.contains(tangential) || theta2_.contains(tangential)) {
        throw Error("cancellation field contains a tangential derivative of the velocity");
    }
}

CancellationField CancellationField::generic() {
    return {DiffExpr::jet(Base::theta1), DiffExpr::jet(Base::theta2)};
}

CancellationField CancellationField::velocity_zz() {
    return {DiffExpr::jet(Base::u, 0, 0, 2), DiffExpr::jet(Base::w, 0, 0, 2)};
}

CancellationField CancellationField::magnetic() {
    return {DiffExpr::jet(Base::psi, 0, 0, 1), -DiffExpr::jet(Base::psi, 0, 1, 0)};
}

DiffExpr directional(const CancellationField& theta, const DiffExpr& e) {
    return theta.theta1() * differentiate(e, Axis::x) + theta.theta2() * differentiate(e, Axis::z);
}

DiffExpr linearize(const DiffExpr& q, const std::map<Base, Base>& perturbed) {
    auto background_of = [&](const JetVar& j) -> std::optional<DiffExpr> {
        auto it = perturbed.find(j.base);
        if (it == perturbed.end()) return std::nullopt;
        JetVar b = j;
        b.base = it->second;
        return DiffExpr::jet(b);
    };
    DiffExpr out;
    for (const auto& [m, c] : q.terms()) {
        // Leibniz over factors: one perturbed factor at a time, the rest at background.
        for (const auto& [j, p] : m.factors()) {
            if (!perturbed.contains(j.base)) continue;
            DiffExpr rest(jet::Monomial::mu_power(m.mu()) * jet::Monomial::kappa_power(m.kappa()), c * p);
            for (const auto& [k, pk] : m.factors()) {
                std::uint32_t n = (k == j) ? pk - 1 : pk;
                if (n == 0) continue;
                auto bg = background_of(k);
                rest *= bg ? bg->pow(n) : DiffExpr(jet::Monomial(k, n));
            }
            out += rest * DiffExpr::jet(j);
        }
    }
    return out;
}

LinearizedEquation linearize_prandtl(Background background) {
    DiffExpr u = DiffExpr::jet(Base::u);
    DiffExpr w = DiffExpr::jet(Base::w);
    DiffExpr q = differentiate(u, Axis::t) + u * differentiate(u, Axis::x) + w * differentiate(u, Axis::z) -
                 DiffExpr::mu() * differentiate(u, Axis::z, 2);

    DiffExpr lin = linearize(q, {{Base::u, Base::ubar}, {Base::w, Base::wbar}}) - DiffExpr::jet(Base::src);
    DiffExpr loss = w * DiffExpr::jet(Base::ubar, 0, 0, 1);

    auto restrict_background = [&](const DiffExpr& e) {
        return jet::substitute_all(e, [&](const JetVar& j) -> std::optional<DiffExpr> {
            switch (background) {
            case Background::generic: return std::nullopt;
            case Background::zero:
                if (j.base == Base::ubar || j.base == Base::wbar) return DiffExpr(0);
                return std::nullopt;
            case Background::shear:
                if (j.base == Base::wbar) return DiffExpr(0);
                if (j.base == Base::ubar && (j.dt > 0 || j.dx > 0)) return DiffExpr(0);
                return std::nullopt;
            }
            return std::nullopt;
        });
    };

    LinearizedEquation out;
    out.equation = restrict_background(lin);
    out.loss_term = restrict_background(loss);
    // the loss term is present iff every one of its monomials survives in the equation
    out.loss_present = !out.loss_term.is_zero();
    for (const auto& [m, c] : out.loss_term.terms()) {
        if (out.equation.coefficient(m) != c) out.loss_present = false;
    }
    return out;
}

} // namespace cancelfield::ops
