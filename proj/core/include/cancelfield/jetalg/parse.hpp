#pragma once

#include "cancelfield/jetalg/diff_expr.hpp"

#include <string_view>

namespace cancelfield::jet {

/// Parse the plain-text expression syntax.
///
///   expr    := term (('+' | '-') term)*
///   term    := ('+' | '-')? power ('*' power)*
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | jet | "mu" | "kappa" | '(' expr ')'
///   jet     := base ('_' [txz]+)?
///
/// Whitespace is insignificant. Throws ExprParseError with a 1-based column.
DiffExpr parse_expr(std::string_view text);

JetVar parse_jet(std::string_view text);

} // namespace cancelfield::jet
