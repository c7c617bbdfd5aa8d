#pragma once

#include "cancelfield/operators/report.hpp"
#include "cancelfield/operators/systems.hpp"
#include "cancelfield/operators/transport_op.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cancelfield::ops {

struct ClaimComponent {
    std::string name;
    DiffExpr expr;
};

/// Reduce every component under `rs`; proved iff all normal forms vanish.
VerificationReport verify_exact(std::string name, const std::vector<ClaimComponent>& claims, const RewriteSystem& rs);

/// Reduce every component under `rs`; proved iff the largest tangential
/// order of the normal forms is at most `bound`. Throws TimeJetPresent if a
/// ∂_t-jet survives reduction.
VerificationReport verify_bounded(std::string name, const std::vector<ClaimComponent>& claims,
                                  const RewriteSystem& rs, int bound,
                                  const jet::TangentialWeights& weights = jet::default_tangential_weights());

/// [P, Θ·∇] applied to a free test function, reduced under `rs` and
/// classified by tangential order (bound 1). The trace lists every monomial
/// on which (PΘ)·∇test and −Θ·[∇, P]test cancel.
VerificationReport commutator_with_directional(const TransportDiffusionOp& op, const CancellationField& theta,
                                               const RewriteSystem& rs, std::string name = "commutator");

enum class ClassicalCase { vorticity_transport, theta_uzz, f1_equals_omega_g1, directional_equals_minus_omega_f1 };
enum class MhdCase { stream_transport, theta_h, directional_equals_f_u1f1, symmetric_system_m1 };

struct ClassicalOptions {
    bool drop_divergence{false};
};

VerificationReport verify_classical(ClassicalCase c, const ClassicalOptions& opts = {});
VerificationReport verify_mhd(MhdCase c);

std::string_view case_name(ClassicalCase c) noexcept;
std::string_view case_name(MhdCase c) noexcept;

/// The eight identity cases, in suite order.
const std::vector<std::string>& symbolic_suite();

/// Lemma instances: generic Θ under the hypothesis, Θ = u_zz, Θ = h.
const std::vector<std::string>& lemma_suite();

/// Cases that must fail: Θ = (1,0) and theta_uzz without the divergence rule.
const std::vector<std::string>& negative_controls();

/// Any name from the three lists above; nullopt for unknown names.
std::optional<VerificationReport> verify_by_name(std::string_view name);

/// Re-apply a component's recorded rewrite steps to its initial expression.
DiffExpr replay_component(const ComponentResult& c, const RewriteSystem& rs);

} // namespace cancelfield::ops
