#include "cancelfield/numerics/field.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cancelfield::num {

ScalarField2D::ScalarField2D(const Grid2D& g, double fill) : grid_(g), v_(g.size(), fill) {}

ScalarField2D::ScalarField2D(const Grid2D& g, std::vector<double> values) : grid_(g), v_(std::move(values)) {
    if (v_.size() != g.size()) throw InvalidGrid("value count does not match grid");
}

ScalarField2D ScalarField2D::sample(const Grid2D& g, const std::function<double(double, double)>& fn) {
    ScalarField2D out(g);
    for (std::size_t i = 0; i < g.nx(); ++i) {
        const double x = g.x(i);
        for (std::size_t k = 0; k < g.nz(); ++k) out(i, k) = fn(x, g.z(k));
    }
    return out;
}

void ScalarField2D::check_same_grid(const ScalarField2D& o) const {
    if (!(grid_ == o.grid_)) throw InvalidGrid("field arithmetic across different grids");
}

ScalarField2D& ScalarField2D::operator+=(const ScalarField2D& o) {
    check_same_grid(o);
    for (std::size_t n = 0; n < v_.size(); ++n) v_[n] += o.v_[n];
    return *this;
}

ScalarField2D& ScalarField2D::operator-=(const ScalarField2D& o) {
    check_same_grid(o);
    for (std::size_t n = 0; n < v_.size(); ++n) v_[n] -= o.v_[n];
    return *this;
}

ScalarField2D& ScalarField2D::operator*=(const ScalarField2D& o) {
    check_same_grid(o);
    for (std::size_t n = 0; n < v_.size(); ++n) v_[n] *= o.v_[n];
    return *this;
}

ScalarField2D& ScalarField2D::operator/=(const ScalarField2D& o) {
    check_same_grid(o);
    for (std::size_t n = 0; n < v_.size(); ++n) v_[n] /= o.v_[n];
    return *this;
}

ScalarField2D& ScalarField2D::operator*=(double s) {
    for (double& x : v_) x *= s;
    return *this;
}

double ScalarField2D::max_abs() const noexcept { return max_abs_rows(0, nz()); }

double ScalarField2D::max_abs_rows(std::size_t k0, std::size_t k1) const noexcept {
    double m = 0.0;
    for (std::size_t i = 0; i < nx(); ++i) {
        for (std::size_t k = k0; k < k1; ++k) m = std::max(m, std::abs((*this)(i, k)));
    }
    return m;
}

double ScalarField2D::min_abs() const noexcept {
    double m = std::numeric_limits<double>::infinity();
    for (double x : v_) m = std::min(m, std::abs(x));
    return m;
}

double ScalarField2D::rms_rows(std::size_t k0, std::size_t k1) const noexcept {
    double s = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < nx(); ++i) {
        for (std::size_t k = k0; k < k1; ++k) {
            s += (*this)(i, k) * (*this)(i, k);
            ++n;
        }
    }
    return n == 0 ? 0.0 : std::sqrt(s / static_cast<double>(n));
}

ScalarField2D ScalarField2D::shifted_x(std::ptrdiff_t cells) const {
    ScalarField2D out(grid_);
    const auto nxs = static_cast<std::ptrdiff_t>(nx());
    for (std::ptrdiff_t i = 0; i < nxs; ++i) {
        const std::ptrdiff_t src = ((i - cells) % nxs + nxs) % nxs;
        for (std::size_t k = 0; k < nz(); ++k) {
            out(static_cast<std::size_t>(i), k) = (*this)(static_cast<std::size_t>(src), k);
        }
    }
    return out;
}

const ScalarField2D& ScalarField2D::require_finite(std::string_view what) const {
    for (std::size_t n = 0; n < v_.size(); ++n) {
        if (!std::isfinite(v_[n])) {
            throw NonFinite(std::string(what) + ": non-finite value at (i=" + std::to_string(n / nz()) +
                            ", k=" + std::to_string(n % nz()) + ")");
        }
    }
    return *this;
}

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b) { return a += b; }
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b) { return a -= b; }
ScalarField2D operator*(ScalarField2D a, const ScalarField2D& b) { return a *= b; }
ScalarField2D operator/(ScalarField2D a, const ScalarField2D& b) { return a /= b; }
ScalarField2D operator*(double s, ScalarField2D a) { return a *= s; }
ScalarField2D operator-(ScalarField2D a) { return a *= -1.0; }

} // namespace cancelfield::num
