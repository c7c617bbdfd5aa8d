#pragma once

#include <span>
#include <vector>

namespace cancelfield::num {

/// Thomas algorithm for a[k] x[k-1] + b[k] x[k] + c[k] x[k+1] = d[k].
/// a[0] and c[n-1] are ignored. No pivoting: callers pass diagonally
/// dominant systems.
std::vector<double> solve_tridiagonal(std::span<const double> a, std::span<const double> b,
                                      std::span<const double> c, std::span<const double> d);

/// Reusable workspace variant; writes the solution into `x`.
class TridiagonalSolver {
public:
    explicit TridiagonalSolver(std::size_t n) : cp_(n), dp_(n) {}
    void solve(std::span<const double> a, std::span<const double> b, std::span<const double> c,
               std::span<const double> d, std::span<double> x);

private:
    std::vector<double> cp_;
    std::vector<double> dp_;
};

} // namespace cancelfield::num
