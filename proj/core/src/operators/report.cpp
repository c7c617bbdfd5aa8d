#include "cancelfield/operators/report.hpp"

namespace cancelfield::ops {

DiffExpr VerificationReport::residual() const {
    for (const auto& c : components) {
        if (!c.residual.is_zero()) return c.residual;
    }
    return {};
}

std::string_view to_string(Status s) noexcept { return s == Status::proved ? "proved" : "failed"; }

nlohmann::json to_json(const VerificationReport& r, int verbosity) {
    nlohmann::json j;
    j["identity"] = r.name;
    j["status"] = to_string(r.status);
    j["kind"] = r.kind == ClaimKind::exact ? "exact" : "classification";
    j["system"] = r.system;
    j["max_tangential_order"] = r.max_tangential_order;
    if (r.kind == ClaimKind::classification) j["declared_bound"] = r.declared_bound;
    j["residual"] = jet::to_string(r.residual());

    auto comps = nlohmann::json::array();
    for (const auto& c : r.components) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["residual"] = jet::to_string(c.residual);
        cj["residual_terms"] = c.residual.size();
        cj["tangential_order"] = c.tangential_order;
        cj["rewrite_steps"] = c.steps.size();
        if (verbosity >= 2) {
            cj["initial"] = jet::to_string(c.initial);
            auto steps = nlohmann::json::array();
            for (const auto& s : c.steps) {
                steps.push_back({{"rule", s.rule_index}, {"target", jet::to_string(s.target)}});
            }
            cj["steps"] = std::move(steps);
        }
        comps.push_back(std::move(cj));
    }
    j["components"] = std::move(comps);

    if (verbosity >= 1) {
        auto off = nlohmann::json::array();
        for (const auto& o : r.offending) off.push_back({{"term", o.term}, {"order", o.order}});
        j["offending_terms"] = std::move(off);
        j["assumptions"] = r.assumptions;
        j["notes"] = r.notes;
        auto trace = nlohmann::json::array();
        for (const auto& t : r.trace) trace.push_back({{"kind", t.kind}, {"text", t.text}});
        j["trace"] = std::move(trace);
    }
    return j;
}

} // namespace cancelfield::ops
