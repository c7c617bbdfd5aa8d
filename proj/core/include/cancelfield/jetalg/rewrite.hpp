#pragma once

#include "cancelfield/jetalg/diff_expr.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace cancelfield::jet {

/// Oriented equality lhs -> rhs. With derived closure on, the rule also
/// rewrites every prolongation ∂_t^a ∂_x^b ∂_z^c lhs to the same derivative
/// of rhs.
class RewriteRule {
public:
    /// Throws InvalidRule if rhs contains a jet the rule itself would match.
    RewriteRule(std::string name, JetVar lhs, DiffExpr rhs);

    const std::string& name() const noexcept { return name_; }
    const JetVar& lhs() const noexcept { return lhs_; }
    const DiffExpr& rhs() const noexcept { return rhs_; }

    bool matches(const JetVar& j, bool closure) const noexcept;

    /// rhs differentiated to reach `j`; precondition: matches(j, closure).
    DiffExpr instantiate(const JetVar& j) const;

private:
    std::string name_;
    JetVar lhs_;
    DiffExpr rhs_;
};

/// One rewrite applied during reduction: jet `target` replaced everywhere by
/// the instantiation of rule `rule_index`.
struct RewriteStep {
    std::size_t rule_index{0};
    JetVar target{};

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

struct Reduction {
    DiffExpr result;
    std::vector<RewriteStep> steps;
};

class RewriteSystem {
public:
    RewriteSystem() = default;
    RewriteSystem(std::string name, std::vector<RewriteRule> rules, bool derived_closure = true);

    const std::string& name() const noexcept { return name_; }
    const std::vector<RewriteRule>& rules() const noexcept { return rules_; }
    bool derived_closure() const noexcept { return closure_; }

    /// Copy without the named rule; unknown names are ignored.
    RewriteSystem without(const std::string& rule_name) const;
    RewriteSystem with(const RewriteRule& rule) const;

    /// Index of the first rule rewriting `j`, or npos.
    std::size_t find_rule(const JetVar& j) const noexcept;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::string name_;
    std::vector<RewriteRule> rules_;
    bool closure_{true};
};

struct ReduceOptions {
    std::size_t max_steps{20000};
};

/// Reduce to normal form, recording each rule application.
///
/// Targets are picked by priority: ∂_t-jets first, then jets of w and h,
/// then the rest; within a class the highest canonical jet goes first.
/// Throws IterationLimitExceeded past `max_steps` applications.
Reduction reduce(const DiffExpr& e, const RewriteSystem& rs, const ReduceOptions& opts = {});

DiffExpr normal_form(const DiffExpr& e, const RewriteSystem& rs, const ReduceOptions& opts = {});

/// Re-apply a recorded step sequence to `e`.
DiffExpr replay(const DiffExpr& e, const RewriteSystem& rs, const std::vector<RewriteStep>& steps);

} // namespace cancelfield::jet
