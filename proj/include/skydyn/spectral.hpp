// Discrete sine analysis of boundary-pinned fluctuations.
//
// On the grid, delta F(x_i) = sum_j A_j sin(j pi i / N) with j = 1..N-1, and
// the inverse is the exact discrete orthogonality sum
//   A_j = (2/N) sum_i delta F(x_i) sin(j pi i / N),
// so forward + reconstruct is an identity up to rounding. The sines are read
// from a table indexed by (i*j) mod 2N to keep forward and inverse bit-wise
// consistent. Direct O(N^2) sums; N = 128 needs no FFT.
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "skydyn/errors.hpp"
#include "skydyn/grid.hpp"

namespace skyrmion {

struct ModeSpectrum {
  double t = 0.0;
  std::vector<double> amplitudes;  // A_j, j = 1..N-1
};

struct ModeHistory {
  int mode = 0;
  std::vector<double> t;
  std::vector<double> amplitude;
};

class SineTable {
 public:
  explicit SineTable(int intervals) : n_(intervals), table_(2 * intervals) {
    for (int m = 0; m < 2 * n_; ++m)
      table_[m] = std::sin(std::numbers::pi * m / n_);
  }
  int intervals() const { return n_; }
  // sin(j pi i / N) via the periodicity of the table
  double sin_ji(int j, int i) const {
    return table_[static_cast<std::size_t>(
        (static_cast<long long>(j) * i) % (2 * n_))];
  }

 private:
  int n_;
  std::vector<double> table_;
};

inline ModeSpectrum mode_amplitudes(const std::vector<double>& delta_f,
                                    const Grid& grid,
                                    const SineTable* table = nullptr) {
  const int n = grid.intervals;
  if (delta_f.size() != static_cast<std::size_t>(grid.nodes()))
    throw Error(ErrorCategory::Validation, "fluctuation size mismatch with grid");
  if (std::abs(delta_f.front()) > 1e-9 || std::abs(delta_f.back()) > 1e-9)
    throw Error(ErrorCategory::Validation,
                "fluctuation must vanish at both boundary nodes");
  SineTable local(0 == n ? 1 : n);
  const SineTable& st = table ? *table : local;
  ModeSpectrum sp;
  sp.amplitudes.resize(n - 1);
  for (int j = 1; j < n; ++j) {
    double acc = 0.0;
    for (int i = 1; i < n; ++i) acc += delta_f[i] * st.sin_ji(j, i);
    sp.amplitudes[j - 1] = 2.0 * acc / n;
  }
  return sp;
}

inline std::vector<double> reconstruct(const ModeSpectrum& sp, const Grid& grid,
                                       const SineTable* table = nullptr) {
  const int n = grid.intervals;
  if (sp.amplitudes.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCategory::Validation, "spectrum length must be N-1");
  SineTable local(n);
  const SineTable& st = table ? *table : local;
  std::vector<double> f(grid.nodes(), 0.0);
  for (int i = 1; i < n; ++i) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j) acc += sp.amplitudes[j - 1] * st.sin_ji(j, i);
    f[i] = acc;
  }
  return f;
}

}  // namespace skyrmion
