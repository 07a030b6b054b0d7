// Discrete sine transform identities on boundary-pinned grid functions.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "skydyn/spectral.hpp"

using namespace skyrmion;

namespace {
const Grid kGrid(16.0, 128);

std::vector<double> random_pinned(std::mt19937& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> f(kGrid.nodes());
  for (int i = 1; i < kGrid.intervals; ++i) f[i] = u(rng);
  f.front() = 0.0;
  f.back() = 0.0;
  return f;
}
}  // namespace

TEST_CASE("zero field gives zero spectrum", "[spectral]") {
  std::vector<double> zero(kGrid.nodes(), 0.0);
  for (double a : mode_amplitudes(zero, kGrid).amplitudes) CHECK(a == 0.0);
}

TEST_CASE("single sine mode is resolved exactly", "[spectral]") {
  std::vector<double> f(kGrid.nodes());
  for (int i = 0; i < kGrid.nodes(); ++i)
    f[i] = 0.1 * std::sin(16.0 * std::numbers::pi * kGrid.x(i) / kGrid.length);
  f.front() = 0.0;
  f.back() = 0.0;
  ModeSpectrum sp = mode_amplitudes(f, kGrid);
  CHECK(sp.amplitudes[15] == Catch::Approx(0.1).epsilon(1e-12));
  for (int j = 1; j < kGrid.intervals; ++j)
    if (j != 16) CHECK(std::abs(sp.amplitudes[j - 1]) < 1e-12);
}

TEST_CASE("round trip, Parseval, linearity", "[spectral]") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_pinned(rng);
    ModeSpectrum sp = mode_amplitudes(f, kGrid);
    auto back = reconstruct(sp, kGrid);
    double worst = 0.0, sum_f2 = 0.0, sum_a2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      worst = std::max(worst, std::abs(back[i] - f[i]));
      sum_f2 += f[i] * f[i];
    }
    for (double a : sp.amplitudes) sum_a2 += a * a;
    CHECK(worst < 1e-12);
    CHECK(sum_f2 == Catch::Approx(kGrid.intervals / 2.0 * sum_a2).epsilon(1e-10));
  }

  auto f = random_pinned(rng);
  auto g = random_pinned(rng);
  const double alpha = 0.7, beta = -1.3;
  std::vector<double> combo(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) combo[i] = alpha * f[i] + beta * g[i];
  auto sf = mode_amplitudes(f, kGrid).amplitudes;
  auto sg = mode_amplitudes(g, kGrid).amplitudes;
  auto sc = mode_amplitudes(combo, kGrid).amplitudes;
  for (std::size_t j = 0; j < sc.size(); ++j)
    CHECK(sc[j] == Catch::Approx(alpha * sf[j] + beta * sg[j]).margin(1e-13));
}

TEST_CASE("reconstruction of elementary spectra", "[spectral]") {
  ModeSpectrum zero;
  zero.amplitudes.assign(kGrid.intervals - 1, 0.0);
  for (double v : reconstruct(zero, kGrid)) CHECK(v == 0.0);

  ModeSpectrum arch = zero;
  arch.amplitudes[0] = 1.0;  // A_1: half-sine with unit maximum at the middle
  auto f = reconstruct(arch, kGrid);
  CHECK(f[kGrid.intervals / 2] == Catch::Approx(1.0).epsilon(1e-15));
  CHECK(f.front() == 0.0);
  CHECK(f.back() == 0.0);

  ModeSpectrum wrong;
  wrong.amplitudes.assign(12, 0.0);
  CHECK_THROWS_AS(reconstruct(wrong, kGrid), Error);
}

TEST_CASE("boundary-violating fluctuations are rejected", "[spectral]") {
  std::vector<double> f(kGrid.nodes(), 0.0);
  f.back() = 1e-6;
  CHECK_THROWS_AS(mode_amplitudes(f, kGrid), Error);
}
