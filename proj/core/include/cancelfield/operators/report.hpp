#pragma once

#include "cancelfield/jetalg/rewrite.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace cancelfield::ops {

using jet::DiffExpr;

enum class Status { proved, failed };

/// exact: the residual must vanish identically.
/// classification: the residual may be nonzero but its tangential order must
/// not exceed a declared bound (the "R contains at most first-order
/// tangential derivatives" claims).
enum class ClaimKind { exact, classification };

struct TraceEntry {
    std::string kind; // "rewrite", "chain", "cancel", "note"
    std::string text;
};

struct ComponentResult {
    std::string name;
    DiffExpr initial;  // claimed-zero (or claimed-bounded) quantity before reduction
    std::vector<jet::RewriteStep> steps;
    DiffExpr residual; // normal form of `initial`
    int tangential_order{0};
};

struct OffendingTerm {
    std::string term;
    int order{0};
};

struct VerificationReport {
    std::string name;
    Status status{Status::failed};
    ClaimKind kind{ClaimKind::exact};
    std::string system;
    std::vector<ComponentResult> components;
    int max_tangential_order{0};
    int declared_bound{1};
    std::vector<OffendingTerm> offending;
    std::vector<TraceEntry> trace;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;

    bool proved() const noexcept { return status == Status::proved; }
    /// Residual of the first component that did not vanish, else zero.
    DiffExpr residual() const;
};

std::string_view to_string(Status s) noexcept;

/// verbosity 0: status and residuals; 1: adds offending terms, assumptions,
/// notes and the structural trace; 2: adds every rewrite step.
nlohmann::json to_json(const VerificationReport& r, int verbosity = 0);

} // namespace cancelfield::ops
