#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace jjline::num {

// Inclusive endpoints; n >= 1 (n == 1 yields {lo}).
std::vector<double> linspace(double lo, double hi, std::size_t n);

// Brent's method on a bracketing interval [a, b] with f(a)*f(b) <= 0.
// Converges to |x - x*| < xtol; throws std::invalid_argument if the
// endpoints do not bracket a sign change.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-12, int max_iter = 200);

// Brent's parabolic/golden-section minimizer on [a, b].
double brent_minimize(const std::function<double(double)>& f, double a,
                      double b, double xtol = 1e-10, int max_iter = 200);

// Adaptive Simpson quadrature with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double tol = 1e-12);

// Arithmetic-geometric mean of a, b > 0.
double agm(double a, double b);

// Solves the n x n system A x = rhs by Gaussian elimination with partial
// pivoting. A is row-major and is consumed. Throws on pivot ~ 0.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> rhs);

// Runs body(i) for i in [0, n). body(i) must touch only state owned by
// index i; chunks are contiguous, so results are identical for any thread
// count.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

} // namespace jjline::num
