#include "cancelfield/verify/closed_form.hpp"

#include <cmath>
#include <sstream>

namespace cancelfield::verify {

ClosedForm::ClosedForm(double c) { add(Atom{}, c); }

ClosedForm ClosedForm::atom(double c, bool sine, int k, int n, double lambda, double gamma) {
    ClosedForm f;
    if (k < 0) {
        k = -k;
        if (sine) c = -c;
    }
    f.add(Atom{sine, k, n, lambda, gamma}, c);
    return f;
}

void ClosedForm::add(const Atom& a, double c) {
    if (c == 0.0) return;
    if (a.sine && a.k == 0) return;
    auto [it, fresh] = terms_.try_emplace(a, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0.0) terms_.erase(it);
    }
}

double ClosedForm::operator()(double t, double x, double z) const {
    double s = 0.0;
    for (const auto& [a, c] : terms_) {
        double v = c;
        if (a.k != 0 || a.sine) v *= a.sine ? std::sin(a.k * x) : std::cos(a.k * x);
        if (a.n != 0) v *= std::pow(z, a.n);
        if (a.lambda != 0.0) v *= std::exp(a.lambda * z);
        if (a.gamma != 0.0) v *= std::exp(a.gamma * t);
        s += v;
    }
    return s;
}

ClosedForm ClosedForm::dt(int times) const {
    ClosedForm f = *this;
    for (int r = 0; r < times; ++r) {
        ClosedForm g;
        for (const auto& [a, c] : f.terms_) g.add(a, c * a.gamma);
        f = std::move(g);
    }
    return f;
}

ClosedForm ClosedForm::dx(int times) const {
    ClosedForm f = *this;
    for (int r = 0; r < times; ++r) {
        ClosedForm g;
        for (const auto& [a, c] : f.terms_) {
            Atom b = a;
            b.sine = !a.sine;
            // d/dx cos(kx) = −k sin(kx); d/dx sin(kx) = k cos(kx)
            g.add(b, a.sine ? c * a.k : -c * a.k);
        }
        f = std::move(g);
    }
    return f;
}

ClosedForm ClosedForm::dz(int times) const {
    ClosedForm f = *this;
    for (int r = 0; r < times; ++r) {
        ClosedForm g;
        for (const auto& [a, c] : f.terms_) {
            if (a.n > 0) {
                Atom b = a;
                b.n -= 1;
                g.add(b, c * a.n);
            }
            g.add(a, c * a.lambda);
        }
        f = std::move(g);
    }
    return f;
}

ClosedForm ClosedForm::derivative(int nt, int nx, int nz) const { return dt(nt).dx(nx).dz(nz); }

ClosedForm ClosedForm::integrate_z() const {
    ClosedForm g;
    for (const auto& [a, c] : terms_) {
        if (a.lambda == 0.0) {
            Atom b = a;
            b.n += 1;
            g.add(b, c / (a.n + 1));
            continue;
        }
        // ∫₀^z s^n e^{λs} ds = Σ_{j=0}^{n} (−1)^j n!/(n−j)! z^{n−j} e^{λz}/λ^{j+1}
        //                      − (−1)^n n!/λ^{n+1}
        double fall = 1.0;
        for (int j = 0; j <= a.n; ++j) {
            if (j > 0) fall *= a.n - j + 1;
            const double sign = j % 2 == 0 ? 1.0 : -1.0;
            Atom b = a;
            b.n = a.n - j;
            g.add(b, c * sign * fall / std::pow(a.lambda, j + 1));
        }
        Atom b = a;
        b.n = 0;
        b.lambda = 0.0;
        const double sign = a.n % 2 == 0 ? 1.0 : -1.0;
        g.add(b, -c * sign * fall / std::pow(a.lambda, a.n + 1));
    }
    return g;
}

ClosedForm ClosedForm::at_z(double z) const {
    ClosedForm g;
    for (const auto& [a, c] : terms_) {
        Atom b = a;
        b.n = 0;
        b.lambda = 0.0;
        g.add(b, c * std::pow(z, a.n) * std::exp(a.lambda * z));
    }
    return g;
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
    for (const auto& [a, c] : o.terms_) add(a, c);
    return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
    for (const auto& [a, c] : o.terms_) add(a, -c);
    return *this;
}

ClosedForm& ClosedForm::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, c] : terms_) c *= s;
    return *this;
}

ClosedForm operator*(const ClosedForm& f, const ClosedForm& g) {
    ClosedForm out;
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            const double c = ca * cb;
            const int n = a.n + b.n;
            const double lam = a.lambda + b.lambda;
            const double gam = a.gamma + b.gamma;
            const int kp = a.k + b.k, km = a.k - b.k;
            // product-to-sum; atom() folds negative k
            if (!a.sine && !b.sine) {
                out += ClosedForm::atom(0.5 * c, false, km, n, lam, gam);
                out += ClosedForm::atom(0.5 * c, false, kp, n, lam, gam);
            } else if (a.sine && b.sine) {
                out += ClosedForm::atom(0.5 * c, false, km, n, lam, gam);
                out += ClosedForm::atom(-0.5 * c, false, kp, n, lam, gam);
            } else if (a.sine) {
                out += ClosedForm::atom(0.5 * c, true, kp, n, lam, gam);
                out += ClosedForm::atom(0.5 * c, true, km, n, lam, gam);
            } else {
                out += ClosedForm::atom(0.5 * c, true, kp, n, lam, gam);
                out += ClosedForm::atom(-0.5 * c, true, km, n, lam, gam);
            }
        }
    }
    return out;
}

std::string to_string(const ClosedForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c;
        if (a.k != 0) os << "*" << (a.sine ? "sin(" : "cos(") << a.k << "x)";
        if (a.n != 0) os << "*z^" << a.n;
        if (a.lambda != 0.0) os << "*exp(" << a.lambda << "z)";
        if (a.gamma != 0.0) os << "*exp(" << a.gamma << "t)";
    }
    return os.str();
}

GridSampler::GridSampler(const ClosedForm& f, const num::Grid2D& g) : grid_(g) {
    for (const auto& [a, c] : f.terms()) {
        Row r{c, a.gamma, std::vector<double>(g.nx()), std::vector<double>(g.nz())};
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const double x = g.x(i);
            r.xs[i] = a.k == 0 ? 1.0 : (a.sine ? std::sin(a.k * x) : std::cos(a.k * x));
        }
        for (std::size_t k = 0; k < g.nz(); ++k) {
            const double z = g.z(k);
            r.zs[k] = std::pow(z, a.n) * std::exp(a.lambda * z);
        }
        rows_.push_back(std::move(r));
    }
}

num::ScalarField2D GridSampler::at(double t) const {
    num::ScalarField2D out(grid_);
    for (const auto& r : rows_) {
        const double c = r.coef * std::exp(r.gamma * t);
        for (std::size_t i = 0; i < grid_.nx(); ++i) {
            const double cx = c * r.xs[i];
            for (std::size_t k = 0; k < grid_.nz(); ++k) out(i, k) += cx * r.zs[k];
        }
    }
    return out;
}

} // namespace cancelfield::verify
