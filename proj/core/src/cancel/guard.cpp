#include "cancelfield/cancel/guard.hpp"

#include "cancelfield/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace cancelfield::cancel {

NonVanishingGuard NonVanishingGuard::assess(const ScalarField2D& field, Kind kind, double rel) {
    NonVanishingGuard g;
    g.kind = kind;
    g.min_abs = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < field.nx(); ++i) {
        for (std::size_t k = 0; k < field.nz(); ++k) {
            const double a = std::abs(field(i, k));
            if (a < g.min_abs) {
                g.min_abs = a;
                g.i_min = i;
                g.k_min = k;
            }
        }
    }
    g.threshold = rel * field.max_abs();
    g.satisfied = g.min_abs >= g.threshold && g.min_abs > 0.0;
    return g;
}

void NonVanishingGuard::require(const std::string& where) const {
    if (satisfied) return;
    std::ostringstream os;
    os << where << ": min |" << (kind == Kind::vorticity ? "omega" : "f") << "| = " << min_abs << " at (i=" << i_min
       << ", k=" << k_min << ") is below the threshold " << threshold;
    if (kind == Kind::vorticity) throw MonotonicityViolated(os.str());
    throw DegenerateMagneticField(os.str());
}

NonVanishingGuard monotonicity_guard(const ScalarField2D& omega, double rel) {
    return NonVanishingGuard::assess(omega, NonVanishingGuard::Kind::vorticity, rel);
}

NonVanishingGuard magnetic_guard(const ScalarField2D& f, double rel) {
    return NonVanishingGuard::assess(f, NonVanishingGuard::Kind::magnetic, rel);
}

} // namespace cancelfield::cancel
