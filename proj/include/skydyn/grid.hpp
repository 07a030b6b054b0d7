// Uniform radial grid x_i = i L / N, i = 0..N.
#pragma once

#include <cstddef>
#include <vector>

#include "skydyn/errors.hpp"

namespace skyrmion {

struct Grid {
  double length = 16.0;  // dimensionless box size L
  int intervals = 128;   // number of intervals N (N+1 nodes)

  Grid() = default;
  Grid(double L, int N) : length(L), intervals(N) { validate(); }

  void validate() const {
    if (!(length > 0.0))
      throw Error(ErrorCategory::Validation, "grid length must be positive");
    if (intervals < 16)
      throw Error(ErrorCategory::Validation, "grid needs at least 16 intervals");
  }

  double spacing() const { return length / intervals; }
  int nodes() const { return intervals + 1; }
  double x(int i) const { return i * length / intervals; }

  std::vector<double> node_values() const {
    std::vector<double> xs(nodes());
    for (int i = 0; i < nodes(); ++i) xs[i] = x(i);
    return xs;
  }

  bool operator==(const Grid& o) const {
    return length == o.length && intervals == o.intervals;
  }
};

}  // namespace skyrmion
