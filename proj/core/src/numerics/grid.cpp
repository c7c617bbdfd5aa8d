#include "cancelfield/numerics/grid.hpp"

#include "cancelfield/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cancelfield::num {

Grid2D::Grid2D(std::size_t nx, std::size_t nz, double Z) : nx_(nx), nz_(nz), Z_(Z) {
    if (nx < 8 || nz < 8) {
        throw InvalidGrid("grid needs nx, nz >= 8 (got " + std::to_string(nx) + " x " + std::to_string(nz) + ")");
    }
    if (!(Z > 0.0) || !std::isfinite(Z)) throw InvalidGrid("domain height Z must be positive and finite");
    dx_ = 2.0 * std::numbers::pi / static_cast<double>(nx);
    dz_ = Z / static_cast<double>(nz - 1);
}

double Grid2D::z(std::size_t k) const noexcept {
    if (k + 1 == nz_) return Z_;
    return static_cast<double>(k) * dz_;
}

} // namespace cancelfield::num
