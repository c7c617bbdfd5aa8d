#pragma once

#include "cancelfield/numerics/grid.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace cancelfield::num {

/// nx × nz samples, stored x-major: value(i, k) lives at i*nz + k.
class ScalarField2D {
public:
    explicit ScalarField2D(const Grid2D& g, double fill = 0.0);
    ScalarField2D(const Grid2D& g, std::vector<double> values);

    /// Samples fn(x, z) at every node.
    static ScalarField2D sample(const Grid2D& g, const std::function<double(double, double)>& fn);

    const Grid2D& grid() const noexcept { return grid_; }
    std::size_t nx() const noexcept { return grid_.nx(); }
    std::size_t nz() const noexcept { return grid_.nz(); }

    double& operator()(std::size_t i, std::size_t k) noexcept { return v_[i * grid_.nz() + k]; }
    double operator()(std::size_t i, std::size_t k) const noexcept { return v_[i * grid_.nz() + k]; }

    const std::vector<double>& values() const noexcept { return v_; }
    std::vector<double>& values() noexcept { return v_; }

    ScalarField2D& operator+=(const ScalarField2D& o);
    ScalarField2D& operator-=(const ScalarField2D& o);
    ScalarField2D& operator*=(const ScalarField2D& o);
    ScalarField2D& operator/=(const ScalarField2D& o);
    ScalarField2D& operator*=(double s);

    double max_abs() const noexcept;
    /// Max |v| over rows k in [k0, k1).
    double max_abs_rows(std::size_t k0, std::size_t k1) const noexcept;
    double min_abs() const noexcept;
    /// sqrt(mean(v²)) over rows [k0, k1).
    double rms_rows(std::size_t k0, std::size_t k1) const noexcept;

    /// Copy shifted by `cells` in x: out(i) = in(i - cells) with wrap.
    ScalarField2D shifted_x(std::ptrdiff_t cells) const;

    /// Throws NonFinite naming `what` and the first bad node.
    const ScalarField2D& require_finite(std::string_view what) const;

private:
    void check_same_grid(const ScalarField2D& o) const;

    Grid2D grid_;
    std::vector<double> v_;
};

ScalarField2D operator+(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator-(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator*(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator/(ScalarField2D a, const ScalarField2D& b);
ScalarField2D operator*(double s, ScalarField2D a);
ScalarField2D operator-(ScalarField2D a);

} // namespace cancelfield::num
