#pragma once

#include "cancelfield/solver/outer_flow.hpp"
#include "cancelfield/verify/closed_form.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace cancelfield::verify {

/// Closed-form u* (and f* for MHD) with everything derived from them:
/// w* = −∫₀^z u*_x, ψ* = ∫₀^z f*, h* = −ψ*_x, and the outer traces taken at
/// the lid z = Z.
struct ManufacturedCase {
    std::string name;
    ClosedForm u;
    ClosedForm w;
    std::optional<ClosedForm> f;
    ClosedForm psi;
    ClosedForm h;
    double Z{10.0};
    double mu{1.0};
    double kappa{1.0};
    bool monotone{false};

    bool is_mhd() const noexcept { return f.has_value(); }

    /// u^E, f^E = traces of u*, f* at z = Z.
    ClosedForm uE() const { return u.at_z(Z); }
    ClosedForm fE() const;
    /// ∂_x p^E = −u^E_t − u^E u^E_x, plus f^E f^E_x for MHD (total pressure).
    ClosedForm px() const;

    solver::OuterFlow outer() const;
};

/// Builds w, ψ, h from u and optional f.
ManufacturedCase make_case(std::string name, ClosedForm u, std::optional<ClosedForm> f, double Z, double mu,
                           double kappa, bool monotone);

/// u* = (1 + 0.1 sin x)(1 − e^{−z}) e^{−t/4}.
ManufacturedCase standard_prandtl_case(double Z = 10.0, double mu = 1.0);
/// standard_prandtl_case plus f* = 1 + 0.1 cos x e^{−z}.
ManufacturedCase standard_mhd_case(double Z = 10.0, double mu = 1.0, double kappa = 1.0);
/// u* = (1 − e^{−z})(1 + 0.1 sin x) e^{−t}.
ManufacturedCase solver_prandtl_case(double Z = 10.0, double mu = 1.0);
/// solver_prandtl_case plus f* = 1 + 0.1 cos x (1 + z) e^{−z} e^{−t/4}, which
/// has ∂_z f* = 0 at the wall.
ManufacturedCase solver_mhd_case(double Z = 10.0, double mu = 1.0, double kappa = 1.0);

struct GateReport {
    std::size_t probes{0};
    double max_derivative_mismatch{0.0};
    double max_constraint_mismatch{0.0};
    double max_wall_value{0.0};
    double min_uz{0.0}; // over probes; meaningful for monotone cases
    bool passed{false};
};

/// Compares every derivative closure up to order 3 against fourth-order
/// central differences of the next-lower closure at seeded random probes,
/// checks w*_z = −u*_x, ψ*_z = f*, h* = −ψ*_x, u*(x,0) = 0 and, for
/// monotone cases, u*_z > 0. Throws InconsistentCase past `tol`.
GateReport self_consistency_gate(const ManufacturedCase& c, std::uint64_t seed = 20240613, std::size_t probes = 64,
                                 double tol = 1e-6);

} // namespace cancelfield::verify
