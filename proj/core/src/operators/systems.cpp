#include "cancelfield/operators/systems.hpp"

namespace cancelfield::ops {

using jet::Base;
using jet::DiffExpr;
using jet::jv;
using jet::RewriteRule;

namespace {

DiffExpr J(Base b, std::uint16_t dt = 0, std::uint16_t dx = 0, std::uint16_t dz = 0) {
    return DiffExpr::jet(b, dt, dx, dz);
}

// u_t = μu_zz − u u_x − w u_z − pE_x (+ f f_x + h f_z for MHD)
RewriteRule momentum_rule(bool magnetic) {
    DiffExpr rhs = DiffExpr::mu() * J(Base::u, 0, 0, 2) - J(Base::u) * J(Base::u, 0, 1) -
                   J(Base::w) * J(Base::u, 0, 0, 1) - J(Base::pE, 0, 1);
    if (magnetic) rhs += J(Base::f) * J(Base::f, 0, 1) + J(Base::h) * J(Base::f, 0, 0, 1);
    return {kRuleMomentum, jv(Base::u, 1), rhs};
}

RewriteRule divergence_rule() { return {kRuleDivergence, jv(Base::w, 0, 0, 1), -J(Base::u, 0, 1)}; }

RewriteRule pressure_rule() { return {kRulePressure, jv(Base::pE, 0, 0, 1), DiffExpr(0)}; }

// ψ_t = −uψ_x − wψ_z + κψ_zz, i.e. P^κψ = 0
DiffExpr stream_rhs() {
    return -J(Base::u) * J(Base::psi, 0, 1) - J(Base::w) * J(Base::psi, 0, 0, 1) +
           DiffExpr::kappa() * J(Base::psi, 0, 0, 2);
}

} // namespace

RewriteSystem prandtl_system() {
    return {"prandtl", {momentum_rule(false), divergence_rule(), pressure_rule()}};
}

RewriteSystem divergence_system() { return {"divergence", {divergence_rule()}}; }

RewriteSystem lemma_system() {
    // P^μ θ_i = θ₁ ∂_x u_i + θ₂ ∂_z u_i with u_1 = u, u_2 = w
    auto hypothesis = [](Base theta, Base comp) {
        DiffExpr t = J(theta);
        DiffExpr rhs = J(Base::theta1) * J(comp, 0, 1) + J(Base::theta2) * J(comp, 0, 0, 1) -
                       J(Base::u) * J(theta, 0, 1) - J(Base::w) * J(theta, 0, 0, 1) +
                       DiffExpr::mu() * J(theta, 0, 0, 2);
        return RewriteRule(std::string(jet::base_name(theta)) + "_hypothesis", jv(theta, 1), rhs);
    };
    return {"lemma", {hypothesis(Base::theta1, Base::u), hypothesis(Base::theta2, Base::w), divergence_rule()}};
}

RewriteSystem mhd_stream_system() {
    return {"mhd_stream",
            {
                momentum_rule(true),
                RewriteRule("stream_transport", jv(Base::psi, 1), stream_rhs()),
                RewriteRule("f_stream", jv(Base::f), J(Base::psi, 0, 0, 1)),
                RewriteRule("h_stream", jv(Base::h), -J(Base::psi, 0, 1)),
                divergence_rule(),
                pressure_rule(),
            }};
}

RewriteSystem mhd_field_system() {
    DiffExpr induction = DiffExpr::kappa() * J(Base::f, 0, 0, 2) - J(Base::u) * J(Base::f, 0, 1) -
                         J(Base::w) * J(Base::f, 0, 0, 1) + J(Base::f) * J(Base::u, 0, 1) +
                         J(Base::h) * J(Base::u, 0, 0, 1);
    return {"mhd_field",
            {
                momentum_rule(true),
                RewriteRule("induction", jv(Base::f, 1), induction),
                divergence_rule(),
                RewriteRule("magnetic_divergence", jv(Base::h, 0, 0, 1), -J(Base::f, 0, 1)),
                RewriteRule("psi_z", jv(Base::psi, 0, 0, 1), J(Base::f)),
                RewriteRule("psi_x", jv(Base::psi, 0, 1), -J(Base::h)),
                pressure_rule(),
            }};
}

RewriteSystem prandtl_time_system() {
    return {"prandtl_time",
            {
                momentum_rule(false),
                RewriteRule("divergence_t", jv(Base::w, 1, 0, 1), -J(Base::u, 1, 1)),
                pressure_rule(),
            }};
}

RewriteSystem mhd_time_system() {
    return {"mhd_time",
            {
                momentum_rule(true),
                RewriteRule("stream_transport", jv(Base::psi, 1), stream_rhs()),
                RewriteRule("f_t", jv(Base::f, 1), J(Base::psi, 1, 0, 1)),
                RewriteRule("h_t", jv(Base::h, 1), -J(Base::psi, 1, 1)),
                RewriteRule("divergence_t", jv(Base::w, 1, 0, 1), -J(Base::u, 1, 1)),
                pressure_rule(),
            }};
}

} // namespace cancelfield::ops
