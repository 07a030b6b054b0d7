// Static radial profile on a grid, with the discrete residual norm used to
// accept or reject it.
#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "skydyn/grid.hpp"
#include "skydyn/model.hpp"
#include "skydyn/numerics.hpp"

namespace skyrmion {

inline constexpr double kBoundaryTol = 1e-3;   // |F(L)| accepted at the wall
inline constexpr double kResidualTol = 1e-6;   // accepted discrete residual

struct Profile {
  Grid grid;
  std::vector<double> values;  // F(x_i), radians
  StaticEquationSpec spec;
  double residual_norm = 0.0;  // max interior |residual|, central differences
  bool monotone = true;        // soft diagnostic: F nonincreasing on the grid

  double boundary_origin() const { return spec.winding * std::numbers::pi; }

  void validate_boundaries() const {
    if (values.size() != static_cast<std::size_t>(grid.nodes()))
      throw Error(ErrorCategory::Validation, "profile size mismatch with grid");
    if (values.front() != boundary_origin())
      throw Error(ErrorCategory::Validation, "profile must have F(0) = n pi");
    if (std::abs(values.back()) > kBoundaryTol)
      throw Error(ErrorCategory::Validation, "profile must vanish at x = L");
  }
};

// Max interior |residual| of the discrete (central-difference) operator.
inline double profile_residual_norm(const Grid& grid,
                                    const std::vector<double>& F,
                                    const StaticEquationSpec& spec,
                                    const ModelParams& p) {
  const double h = grid.spacing();
  double worst = 0.0;
  for (int i = 1; i < grid.intervals; ++i) {
    const double Fp = (F[i + 1] - F[i - 1]) / (2.0 * h);
    const double Fpp = (F[i + 1] - 2.0 * F[i] + F[i - 1]) / (h * h);
    worst = std::max(worst,
                     std::abs(static_residual(spec, grid.x(i), F[i], Fp, Fpp, p)));
  }
  return worst;
}

inline bool is_nonincreasing(const std::vector<double>& F) {
  for (std::size_t i = 1; i < F.size(); ++i)
    if (F[i] > F[i - 1] + 1e-12) return false;
  return true;
}

// Sample an analytic profile onto a grid (used for the kink-based mass cases).
inline Profile profile_from_function(const Grid& grid,
                                     const std::function<double(double)>& f,
                                     StaticEquationSpec spec) {
  grid.validate();
  Profile pr;
  pr.grid = grid;
  pr.spec = spec;
  pr.values.resize(grid.nodes());
  for (int i = 0; i < grid.nodes(); ++i) pr.values[i] = f(grid.x(i));
  pr.values[0] = pr.boundary_origin();
  pr.monotone = is_nonincreasing(pr.values);
  return pr;
}

}  // namespace skyrmion
