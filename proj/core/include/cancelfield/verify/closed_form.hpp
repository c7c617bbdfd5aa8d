#pragma once

#include "cancelfield/numerics/field.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace cancelfield::verify {

/// One separable atom: trig(k x) · z^n · e^{λ z} · e^{γ t}. trig is cos or
/// sin; k ≥ 0 (cos(0·x) = 1, sin(0·x) atoms are dropped).
struct Atom {
    bool sine{false};
    int k{0};
    int n{0};
    double lambda{0.0};
    double gamma{0.0};

    auto operator<=>(const Atom&) const = default;
};

/// Finite sum of coefficient × Atom. Closed under ∂_t, ∂_x, ∂_z, products
/// and ∫₀^z, so every derivative a check needs is exact.
class ClosedForm {
public:
    ClosedForm() = default;
    ClosedForm(double c); // NOLINT: constants convert implicitly

    /// c · trig(k x) · z^n e^{λz} · e^{γt}
    static ClosedForm atom(double c, bool sine, int k, int n = 0, double lambda = 0.0, double gamma = 0.0);
    static ClosedForm cos_x(int k, double c = 1.0) { return atom(c, false, k); }
    static ClosedForm sin_x(int k, double c = 1.0) { return atom(c, true, k); }
    /// z^n e^{λz}
    static ClosedForm zexp(int n, double lambda, double c = 1.0) { return atom(c, false, 0, n, lambda); }
    /// e^{γt}
    static ClosedForm texp(double gamma, double c = 1.0) { return atom(c, false, 0, 0, 0.0, gamma); }

    double operator()(double t, double x, double z) const;

    ClosedForm dt(int times = 1) const;
    ClosedForm dx(int times = 1) const;
    ClosedForm dz(int times = 1) const;
    ClosedForm derivative(int nt, int nx, int nz) const;
    /// ∫₀^z (·) dz′
    ClosedForm integrate_z() const;
    /// Freezes z at a value: the result no longer depends on z.
    ClosedForm at_z(double z) const;

    ClosedForm& operator+=(const ClosedForm& o);
    ClosedForm& operator-=(const ClosedForm& o);
    ClosedForm& operator*=(double s);

    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
    friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
    friend ClosedForm operator*(ClosedForm a, double s) { return a *= s; }
    friend ClosedForm operator*(double s, ClosedForm a) { return a *= s; }
    friend ClosedForm operator-(ClosedForm a) { return a *= -1.0; }
    friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::map<Atom, double>& terms() const noexcept { return terms_; }

private:
    void add(const Atom& a, double c);
    std::map<Atom, double> terms_;
};

std::string to_string(const ClosedForm& f);

/// Tabulates each atom's x- and z-factors once for a grid; at(t) then costs
/// one multiply-add per atom and node.
class GridSampler {
public:
    GridSampler(const ClosedForm& f, const num::Grid2D& g);
    num::ScalarField2D at(double t) const;

private:
    struct Row {
        double coef;
        double gamma;
        std::vector<double> xs;
        std::vector<double> zs;
    };
    num::Grid2D grid_;
    std::vector<Row> rows_;
};

} // namespace cancelfield::verify
