#pragma once

#include "cancelfield/jetalg/diff_expr.hpp"

#include <cstdint>

namespace cancelfield::jet {

/// num / den^power for one fixed, assumed-nonzero denominator factor.
///
/// The good unknowns divide by a single quantity (ω or f), so sums and
/// derivatives stay within powers of that factor and the cleared numerator
/// is obtained by bringing everything to the largest power.
class Fraction {
public:
    Fraction(DiffExpr num, DiffExpr den, std::uint32_t power = 0);

    static Fraction polynomial(DiffExpr num, const DiffExpr& den) { return Fraction(std::move(num), den, 0); }

    const DiffExpr& numerator() const noexcept { return num_; }
    const DiffExpr& denominator() const noexcept { return den_; }
    std::uint32_t power() const noexcept { return power_; }

    Fraction& operator+=(const Fraction& o);
    Fraction& operator-=(const Fraction& o);
    friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
    friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
    friend Fraction operator*(const Fraction& a, const Fraction& b);
    friend Fraction operator*(const DiffExpr& a, const Fraction& b);

    /// Quotient rule: (N / D^k)' = (N' D - k N D') / D^(k+1).
    Fraction derivative(Axis axis) const;

    /// Numerator brought to denominator den^target (target >= power()).
    DiffExpr cleared(std::uint32_t target) const;

private:
    void check_compatible(const Fraction& o) const;

    DiffExpr num_;
    DiffExpr den_;
    std::uint32_t power_;
};

} // namespace cancelfield::jet
