#include "cancelfield/verify/manufactured.hpp"

#include "cancelfield/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace cancelfield::verify {

ClosedForm ManufacturedCase::fE() const { return f ? f->at_z(Z) : ClosedForm{}; }

ClosedForm ManufacturedCase::px() const {
    const ClosedForm ue = uE();
    ClosedForm p = -ue.dt() - ue * ue.dx();
    if (f) {
        const ClosedForm fe = fE();
        p += fe * fe.dx();
    }
    return p;
}

solver::OuterFlow ManufacturedCase::outer() const {
    solver::OuterFlow o;
    o.name = "manufactured:" + name;
    auto wrap = [](ClosedForm g) { return [g = std::move(g)](double t, double x) { return g(t, x, 0.0); }; };
    const ClosedForm ue = uE();
    o.uE = wrap(ue);
    o.uE_t = wrap(ue.dt());
    o.uE_x = wrap(ue.dx());
    const ClosedForm fe = fE();
    o.fE = wrap(fe);
    o.fE_x = wrap(fe.dx());
    return o;
}

ManufacturedCase make_case(std::string name, ClosedForm u, std::optional<ClosedForm> f, double Z, double mu,
                           double kappa, bool monotone) {
    ManufacturedCase c;
    c.name = std::move(name);
    c.w = -u.dx().integrate_z();
    c.u = std::move(u);
    if (f) {
        c.psi = f->integrate_z();
        c.h = -c.psi.dx();
    }
    c.f = std::move(f);
    c.Z = Z;
    c.mu = mu;
    c.kappa = kappa;
    c.monotone = monotone;
    return c;
}

namespace {

// (1 + a sin x)(1 − e^{−z}) e^{γt}
ClosedForm monotone_profile(double a, double gamma) {
    return (ClosedForm(1.0) + ClosedForm::sin_x(1, a)) * (ClosedForm(1.0) - ClosedForm::zexp(0, -1.0)) *
           ClosedForm::texp(gamma);
}

} // namespace

ManufacturedCase standard_prandtl_case(double Z, double mu) {
    return make_case("standard_prandtl", monotone_profile(0.1, -0.25), std::nullopt, Z, mu, 1.0, true);
}

ManufacturedCase standard_mhd_case(double Z, double mu, double kappa) {
    ClosedForm f = ClosedForm(1.0) + ClosedForm::cos_x(1, 0.1) * ClosedForm::zexp(0, -1.0);
    return make_case("standard_mhd", monotone_profile(0.1, -0.25), f, Z, mu, kappa, true);
}

ManufacturedCase solver_prandtl_case(double Z, double mu) {
    return make_case("solver_prandtl", monotone_profile(0.1, -1.0), std::nullopt, Z, mu, 1.0, true);
}

ManufacturedCase solver_mhd_case(double Z, double mu, double kappa) {
    ClosedForm zpart = ClosedForm::zexp(0, -1.0) + ClosedForm::zexp(1, -1.0);
    ClosedForm f = ClosedForm(1.0) + ClosedForm::cos_x(1, 0.1) * zpart * ClosedForm::texp(-0.25);
    return make_case("solver_mhd", monotone_profile(0.1, -1.0), f, Z, mu, kappa, true);
}

namespace {

// Fourth-order central difference of g along axis a at (t, x, z).
double fd4(const ClosedForm& g, int axis, double t, double x, double z, double h) {
    auto at = [&](double s) {
        switch (axis) {
        case 0: return g(t + s, x, z);
        case 1: return g(t, x + s, z);
        default: return g(t, x, z + s);
        }
    };
    return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
}

struct Named {
    const char* name;
    const ClosedForm* field;
};

} // namespace

GateReport self_consistency_gate(const ManufacturedCase& c, std::uint64_t seed, std::size_t probes, double tol) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(0.0, 2.0 * std::numbers::pi);
    // Keep the z-stencil inside (0, Z).
    std::uniform_real_distribution<double> uz(0.05, c.Z - 0.05);
    std::uniform_real_distribution<double> ut(0.0, 1.0);
    const double h = 1e-3;

    std::vector<Named> fields = {{"u", &c.u}, {"w", &c.w}};
    if (c.f) {
        fields.push_back({"f", &*c.f});
        fields.push_back({"psi", &c.psi});
        fields.push_back({"h", &c.h});
    }

    GateReport r;
    r.probes = probes;
    r.min_uz = std::numeric_limits<double>::infinity();
    std::string worst;
    for (std::size_t p = 0; p < probes; ++p) {
        const double t = ut(rng), x = ux(rng), z = uz(rng);
        for (const auto& nf : fields) {
            // Every closure of total order ≤ 2, differentiated once more.
            for (int a = 0; a <= 2; ++a) {
                for (int b = 0; a + b <= 2; ++b) {
                    for (int d = 0; a + b + d <= 2; ++d) {
                        const ClosedForm base = nf.field->derivative(a, b, d);
                        for (int axis = 0; axis < 3; ++axis) {
                            const ClosedForm exact =
                                nf.field->derivative(a + (axis == 0), b + (axis == 1), d + (axis == 2));
                            const double diff = std::abs(exact(t, x, z) - fd4(base, axis, t, x, z, h));
                            if (diff > r.max_derivative_mismatch) {
                                r.max_derivative_mismatch = diff;
                                std::ostringstream os;
                                os << nf.name << " derivative (" << a << "," << b << "," << d << ") along axis " << axis;
                                worst = os.str();
                            }
                        }
                    }
                }
            }
        }
        double cm = std::abs(fd4(c.w, 2, t, x, z, h) + c.u.dx()(t, x, z));
        if (c.f) {
            cm = std::max(cm, std::abs(fd4(c.psi, 2, t, x, z, h) - (*c.f)(t, x, z)));
            cm = std::max(cm, std::abs(c.h(t, x, z) + fd4(c.psi, 1, t, x, z, h)));
        }
        r.max_constraint_mismatch = std::max(r.max_constraint_mismatch, cm);
        r.max_wall_value = std::max({r.max_wall_value, std::abs(c.u(t, x, 0.0)), std::abs(c.w(t, x, 0.0))});
        if (c.f) r.max_wall_value = std::max({r.max_wall_value, std::abs(c.h(t, x, 0.0)), std::abs(c.psi(t, x, 0.0))});
        r.min_uz = std::min(r.min_uz, c.u.dz()(t, x, z));
    }

    std::ostringstream fail;
    if (r.max_derivative_mismatch > tol) fail << "derivative closure mismatch " << r.max_derivative_mismatch << " (" << worst << "); ";
    if (r.max_constraint_mismatch > tol) fail << "constraint mismatch " << r.max_constraint_mismatch << "; ";
    if (r.max_wall_value > tol) fail << "wall value " << r.max_wall_value << "; ";
    if (c.monotone && !(r.min_uz > 0.0)) fail << "u_z not positive (min " << r.min_uz << "); ";
    const std::string msg = fail.str();
    if (!msg.empty()) throw InconsistentCase("case " + c.name + ": " + msg);
    r.passed = true;
    return r;
}

} // namespace cancelfield::verify
