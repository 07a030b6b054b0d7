// Quadrature, finite differences and the tridiagonal solve used by the solvers.
#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "skydyn/errors.hpp"

namespace skyrmion {

// Composite Simpson rule on a uniform grid. An odd interval count is closed
// with the 3/8 rule on the last three intervals.
inline double integrate_simpson(std::span<const double> y, double h) {
  const int n = static_cast<int>(y.size()) - 1;
  if (n < 2) return n == 1 ? 0.5 * h * (y[0] + y[1]) : 0.0;
  auto simpson_even = [&](int m) {  // m intervals, m even, nodes 0..m
    double s = y[0] + y[m];
    for (int i = 1; i < m; ++i) s += y[i] * (i % 2 == 1 ? 4.0 : 2.0);
    return s * h / 3.0;
  };
  if (n % 2 == 0) return simpson_even(n);
  double tail = 3.0 * h / 8.0 * (y[n - 3] + 3.0 * y[n - 2] + 3.0 * y[n - 1] + y[n]);
  return (n == 3 ? 0.0 : simpson_even(n - 3)) + tail;
}

inline double integrate_trapezoid(std::span<const double> y, double h) {
  const int n = static_cast<int>(y.size()) - 1;
  double s = 0.5 * (y[0] + y[n]);
  for (int i = 1; i < n; ++i) s += y[i];
  return s * h;
}

// Second-order first derivative: central at interior nodes, one-sided at the
// two boundary nodes.
inline std::vector<double> derivative_on_grid(std::span<const double> f, double h) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<double> d(f.size());
  d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
  for (int i = 1; i < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
  d[n] = (3.0 * f[n] - 4.0 * f[n - 1] + f[n - 2]) / (2.0 * h);
  return d;
}

// Thomas algorithm for a tridiagonal system; the bands are overwritten.
// Throws DegenerateSolve on a vanishing pivot.
inline std::vector<double> solve_tridiagonal(std::vector<double> sub,
                                             std::vector<double> diag,
                                             std::vector<double> sup,
                                             std::vector<double> rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(diag[i - 1]) < 1e-300)
      throw Error(ErrorCategory::DegenerateSolve,
                  "singular Jacobian in relaxation (zero pivot)");
    const double w = sub[i] / diag[i - 1];
    diag[i] -= w * sup[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  if (std::abs(diag[n - 1]) < 1e-300)
    throw Error(ErrorCategory::DegenerateSolve,
                "singular Jacobian in relaxation (zero pivot)");
  std::vector<double> x(n);
  x[n - 1] = rhs[n - 1] / diag[n - 1];
  for (int i = static_cast<int>(n) - 2; i >= 0; --i)
    x[i] = (rhs[i] - sup[i] * x[i + 1]) / diag[i];
  return x;
}

}  // namespace skyrmion
