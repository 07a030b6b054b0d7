// Physical constants of the model and the derived dimensionless couplings.
//
// Lengths are measured in 1/(e F_pi), time in the same unit, energies in
// gamma = pi F_pi / e ("mass units") throughout the library.
#pragma once

#include <cmath>
#include <numbers>

#include "skydyn/errors.hpp"

namespace skyrmion {

inline constexpr double kHbarC = 197.327;  // MeV fm

struct ModelParams {
  double m_pi = 140.0;      // MeV
  double e = 4.84;          // dimensionless Skyrme coupling
  double f_pi = 108.0;      // MeV
  double epsilon = 3.5e-7;  // symmetry-breaking rescale
  double eps6_sq = 5.0;     // fm^2, sixth-order coupling

  // beta = m_pi / (e F_pi); recomputed on access, never stored separately.
  double beta() const { return m_pi / (e * f_pi); }
  double beta_sq() const { return beta() * beta(); }

  // gamma6 = F_pi^2 eps6^2 e^4 / pi^4, with F_pi^2 eps6^2 made dimensionless
  // via hbar*c.
  double gamma6() const {
    const double f = f_pi / kHbarC;  // 1/fm
    return f * f * eps6_sq * std::pow(e, 4) / std::pow(std::numbers::pi, 4);
  }

  // Energy unit gamma = pi F_pi / e in MeV, for reporting only.
  double mass_unit_gamma_mev() const { return std::numbers::pi * f_pi / e; }
};

inline ModelParams derive_dimensionless(double m_pi, double e, double f_pi,
                                        double epsilon = 3.5e-7,
                                        double eps6_sq = 5.0) {
  if (!(m_pi > 0.0) || !(e > 0.0) || !(f_pi > 0.0))
    throw Error(ErrorCategory::InvalidParameter,
                "m_pi, e and F_pi must be positive");
  if (epsilon < 0.0 || eps6_sq < 0.0)
    throw Error(ErrorCategory::InvalidParameter,
                "epsilon and eps6_sq must be non-negative");
  ModelParams p;
  p.m_pi = m_pi;
  p.e = e;
  p.f_pi = f_pi;
  p.epsilon = epsilon;
  p.eps6_sq = eps6_sq;
  return p;
}

}  // namespace skyrmion
