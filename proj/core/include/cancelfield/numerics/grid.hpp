#pragma once

#include <cstddef>

namespace cancelfield::num {

/// Tensor grid: nx periodic points on [0, 2π), nz points on [0, Z] with both
/// ends included.
class Grid2D {
public:
    Grid2D(std::size_t nx, std::size_t nz, double Z = 10.0);

    std::size_t nx() const noexcept { return nx_; }
    std::size_t nz() const noexcept { return nz_; }
    double Z() const noexcept { return Z_; }
    double dx() const noexcept { return dx_; }
    double dz() const noexcept { return dz_; }
    std::size_t size() const noexcept { return nx_ * nz_; }

    double x(std::size_t i) const noexcept { return static_cast<double>(i) * dx_; }
    // Last row is Z exactly, not (nz-1)*dz.
    double z(std::size_t k) const noexcept;

    bool operator==(const Grid2D& o) const noexcept { return nx_ == o.nx_ && nz_ == o.nz_ && Z_ == o.Z_; }

private:
    std::size_t nx_;
    std::size_t nz_;
    double Z_;
    double dx_;
    double dz_;
};

} // namespace cancelfield::num
