#include "cancelfield/numerics/tridiag.hpp"

#include "cancelfield/error.hpp"

namespace cancelfield::num {

void TridiagonalSolver::solve(std::span<const double> a, std::span<const double> b, std::span<const double> c,
                              std::span<const double> d, std::span<double> x) {
    const std::size_t n = b.size();
    if (a.size() != n || c.size() != n || d.size() != n || x.size() != n || cp_.size() != n) {
        throw Error("tridiagonal solve: size mismatch");
    }
    if (n == 0) return;
    cp_[0] = c[0] / b[0];
    dp_[0] = d[0] / b[0];
    for (std::size_t k = 1; k < n; ++k) {
        const double m = b[k] - a[k] * cp_[k - 1];
        cp_[k] = k + 1 < n ? c[k] / m : 0.0;
        dp_[k] = (d[k] - a[k] * dp_[k - 1]) / m;
    }
    x[n - 1] = dp_[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) x[k] = dp_[k] - cp_[k] * x[k + 1];
}

std::vector<double> solve_tridiagonal(std::span<const double> a, std::span<const double> b,
                                      std::span<const double> c, std::span<const double> d) {
    std::vector<double> x(b.size());
    TridiagonalSolver(b.size()).solve(a, b, c, d, x);
    return x;
}

} // namespace cancelfield::num
