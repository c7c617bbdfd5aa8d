#pragma once

#include "cancelfield/numerics/field.hpp"

#include <string>

namespace cancelfield::cancel {

using num::ScalarField2D;

/// Pointwise non-vanishing check for a field used as a divisor. The
/// threshold is relative: `rel` × max|field|.
struct NonVanishingGuard {
    enum class Kind { vorticity, magnetic };

    Kind kind{Kind::vorticity};
    double min_abs{0.0};
    double threshold{0.0};
    bool satisfied{false};
    std::size_t i_min{0};
    std::size_t k_min{0};

    static NonVanishingGuard assess(const ScalarField2D& field, Kind kind, double rel = 1e-8);

    /// Throws MonotonicityViolated or DegenerateMagneticField naming the
    /// grid point of min |field| unless satisfied.
    void require(const std::string& where) const;
};

using MonotonicityGuard = NonVanishingGuard;

/// Guard on ω = ∂_z u.
NonVanishingGuard monotonicity_guard(const ScalarField2D& omega, double rel = 1e-8);
/// Guard on f.
NonVanishingGuard magnetic_guard(const ScalarField2D& f, double rel = 1e-8);

} // namespace cancelfield::cancel
