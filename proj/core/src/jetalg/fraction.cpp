#include "cancelfield/jetalg/fraction.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>

namespace cancelfield::jet {

Fraction::Fraction(DiffExpr num, DiffExpr den, std::uint32_t power)
    : num_(std::move(num)), den_(std::move(den)), power_(power) {
    if (den_.is_zero()) throw Error("fraction with zero denominator");
}

void Fraction::check_compatible(const Fraction& o) const {
    if (den_ != o.den_) throw Error("fractions over different denominator factors");
}

DiffExpr Fraction::cleared(std::uint32_t target) const {
    if (target < power_) throw Error("cannot clear to a lower denominator power");
    return num_ * den_.pow(target - power_);
}

Fraction& Fraction::operator+=(const Fraction& o) {
    check_compatible(o);
    std::uint32_t p = std::max(power_, o.power_);
    num_ = cleared(p) + o.cleared(p);
    power_ = p;
    return *this;
}

Fraction& Fraction::operator-=(const Fraction& o) {
    check_compatible(o);
    std::uint32_t p = std::max(power_, o.power_);
    num_ = cleared(p) - o.cleared(p);
    power_ = p;
    return *this;
}

Fraction operator*(const Fraction& a, const Fraction& b) {
    a.check_compatible(b);
    return Fraction(a.num_ * b.num_, a.den_, a.power_ + b.power_);
}

Fraction operator*(const DiffExpr& a, const Fraction& b) { return Fraction(a * b.num_, b.den_, b.power_); }

Fraction Fraction::derivative(Axis axis) const {
    DiffExpr dnum = differentiate(num_, axis);
    if (power_ == 0) return Fraction(dnum, den_, 0);
    DiffExpr dden = differentiate(den_, axis);
    DiffExpr n = dnum * den_ - Rational(power_) * num_ * dden;
    return Fraction(std::move(n), den_, power_ + 1);
}

} // namespace cancelfield::jet
