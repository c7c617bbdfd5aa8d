#pragma once

#include <cstddef>
#include <vector>

namespace cancelfield::oracle {

/// Backward-Euler 1D heat equation q_t = ν q_zz on [0, Z] with nz nodes,
/// written without the library's tridiagonal solver. The lid is Dirichlet;
/// the wall is Dirichlet or a mirror-ghost Neumann row.
class HeatOracle1D {
public:
    HeatOracle1D(std::vector<double> q0, double nu, double dz, bool neumann_wall, double wall_value, double lid_value)
        : q_(std::move(q0)), nu_(nu), dz_(dz), neumann_(neumann_wall), wall_(wall_value), lid_(lid_value) {
        if (!neumann_) q_.front() = wall_;
        q_.back() = lid_;
    }

    const std::vector<double>& values() const noexcept { return q_; }

    void step(double dt) {
        const std::size_t n = q_.size();
        const double r = nu_ * dt / (dz_ * dz_);
        std::vector<double> lo(n, -r), di(n, 1 + 2 * r), up(n, -r), rhs = q_;
        lo[0] = 0;
        if (neumann_) {
            up[0] = -2 * r;
        } else {
            di[0] = 1;
            up[0] = 0;
            rhs[0] = wall_;
        }
        lo[n - 1] = 0;
        di[n - 1] = 1;
        up[n - 1] = 0;
        rhs[n - 1] = lid_;
        // forward sweep
        for (std::size_t k = 1; k < n; ++k) {
            const double m = lo[k] / di[k - 1];
            di[k] -= m * up[k - 1];
            rhs[k] -= m * rhs[k - 1];
        }
        q_[n - 1] = rhs[n - 1] / di[n - 1];
        for (std::size_t k = n - 1; k-- > 0;) q_[k] = (rhs[k] - up[k] * q_[k + 1]) / di[k];
    }

private:
    std::vector<double> q_;
    double nu_;
    double dz_;
    bool neumann_;
    double wall_;
    double lid_;
};

} // namespace cancelfield::oracle
