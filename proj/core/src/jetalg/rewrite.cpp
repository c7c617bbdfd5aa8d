#include "cancelfield/jetalg/rewrite.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace cancelfield::jet {

RewriteRule::RewriteRule(std::string name, JetVar lhs, DiffExpr rhs)
    : name_(std::move(name)), lhs_(lhs), rhs_(std::move(rhs)) {
    if (rhs_.contains([&](const JetVar& j) { return matches(j, true); })) {
        throw InvalidRule("rule '" + name_ + "': right-hand side contains a prolongation of " + to_string(lhs_));
    }
}

bool RewriteRule::matches(const JetVar& j, bool closure) const noexcept {
    if (j.base != lhs_.base) return false;
    if (!closure) return j == lhs_;
    return j.dt >= lhs_.dt && j.dx >= lhs_.dx && j.dz >= lhs_.dz;
}

DiffExpr RewriteRule::instantiate(const JetVar& j) const {
    DiffExpr r = differentiate(rhs_, Axis::t, j.dt - lhs_.dt);
    r = differentiate(r, Axis::x, j.dx - lhs_.dx);
    return differentiate(r, Axis::z, j.dz - lhs_.dz);
}

RewriteSystem::RewriteSystem(std::string name, std::vector<RewriteRule> rules, bool derived_closure)
    : name_(std::move(name)), rules_(std::move(rules)), closure_(derived_closure) {}

RewriteSystem RewriteSystem::without(const std::string& rule_name) const {
    RewriteSystem r = *this;
    std::erase_if(r.rules_, [&](const RewriteRule& rule) { return rule.name() == rule_name; });
    r.name_ += " - " + rule_name;
    return r;
}

RewriteSystem RewriteSystem::with(const RewriteRule& rule) const {
    RewriteSystem r = *this;
    r.rules_.push_back(rule);
    r.name_ += " + " + rule.name();
    return r;
}

std::size_t RewriteSystem::find_rule(const JetVar& j) const noexcept {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (rules_[i].matches(j, closure_)) return i;
    }
    return npos;
}

namespace {

int priority_class(const JetVar& j) {
    if (j.has_time()) return 0;
    if (j.base == Base::w || j.base == Base::h) return 1;
    return 2;
}

class Reducer {
public:
    explicit Reducer(const RewriteSystem& rs) : rs_(rs) {}

    const DiffExpr& replacement(std::size_t rule, const JetVar& j) {
        auto key = std::make_pair(rule, j);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(key, rs_.rules()[rule].instantiate(j)).first;
        return it->second;
    }

    std::optional<RewriteStep> next_step(const DiffExpr& e) const {
        std::optional<RewriteStep> best;
        int best_class = 3;
        // jets() is ascending; walk backwards so the highest jet wins ties.
        auto jets = e.jets();
        for (auto it = jets.rbegin(); it != jets.rend(); ++it) {
            int cls = priority_class(*it);
            if (cls >= best_class) continue;
            std::size_t rule = rs_.find_rule(*it);
            if (rule == RewriteSystem::npos) continue;
            best = RewriteStep{rule, *it};
            best_class = cls;
            if (cls == 0) break;
        }
        return best;
    }

private:
    const RewriteSystem& rs_;
    std::map<std::pair<std::size_t, JetVar>, DiffExpr> cache_;
};

} // namespace

Reduction reduce(const DiffExpr& e, const RewriteSystem& rs, const ReduceOptions& opts) {
    Reducer reducer(rs);
    Reduction out{e, {}};
    while (auto step = reducer.next_step(out.result)) {
        if (out.steps.size() >= opts.max_steps) {
            throw IterationLimitExceeded("rewrite system '" + rs.name() + "' exceeded " +
                                         std::to_string(opts.max_steps) + " rule applications");
        }
        out.result = substitute(out.result, step->target, reducer.replacement(step->rule_index, step->target));
        out.steps.push_back(*step);
    }
    return out;
}

DiffExpr normal_form(const DiffExpr& e, const RewriteSystem& rs, const ReduceOptions& opts) {
    return reduce(e, rs, opts).result;
}

DiffExpr replay(const DiffExpr& e, const RewriteSystem& rs, const std::vector<RewriteStep>& steps) {
    DiffExpr r = e;
    for (const auto& s : steps) {
        const auto& rule = rs.rules().at(s.rule_index);
        r = substitute(r, s.target, rule.instantiate(s.target));
    }
    return r;
}

} // namespace cancelfield::jet
