// Static profile equations of the hedgehog and twisty configurations, the
// kink-like analytic profile, and the per-node acceleration of the
// time-dependent equations.
//
// Conventions used everywhere:
//   * x = e F_pi r and tau = e F_pi t are the dimensionless radius and time;
//   * residual = all terms of the equation moved to the left-hand side, so a
//     solution satisfies residual = 0 and the symmetry-breaking source enters
//     with a minus sign;
//   * F(0) = n pi, F -> 0 as x -> infinity (truncated to F(L) = 0).
#pragma once

#include <cmath>
#include <numbers>

#include "skydyn/errors.hpp"
#include "skydyn/params.hpp"

namespace skyrmion {

// Which symmetry-breaking source appears on the right-hand side of the static
// equation: none, the pion-mass term (beta^2/4) x^2 sin F, or the same term
// rescaled by epsilon.
enum class SbVariant { None, PionMass, Modified };

inline const char* sb_variant_name(SbVariant v) {
  switch (v) {
    case SbVariant::None: return "none";
    case SbVariant::PionMass: return "pionmass";
    case SbVariant::Modified: return "modified";
  }
  return "?";
}

// Force form of the sixth-order term. Standard keeps the gamma6/4 coefficient
// on the sin^4F/x^3 F' term; Conservative uses gamma6/2, which makes the force
// the exact variation of the sixth-order energy (and hence energy-conserving).
enum class SixthForce { Standard, Conservative };

inline const char* sixth_force_name(SixthForce f) {
  return f == SixthForce::Standard ? "standard" : "conservative";
}

// Selects one static profile equation.
//   k = 1          spherically symmetric hedgehog equation
//   k >= 2         twisty equation with a = 2(k^2+1), b = 2k^2
//   sixth_order    adds the gamma6 terms (hedgehog only)
struct StaticEquationSpec {
  int k = 1;           // azimuthal twist
  int winding = 1;     // n in F(0) = n pi
  SbVariant sb = SbVariant::Modified;
  bool sixth_order = false;
  SixthForce sixth_force = SixthForce::Standard;

  double a() const { return 2.0 * (k * k + 1); }
  double b() const { return 2.0 * k * k; }

  void validate() const {
    if (k < 1) throw Error(ErrorCategory::Validation, "twist k must be >= 1");
    if (winding < 0)
      throw Error(ErrorCategory::Validation, "winding n must be >= 0");
    if (sixth_order && k != 1)
      throw Error(ErrorCategory::Validation,
                  "the sixth-order equation is only defined for k = 1");
  }
};

// Kink-like profile F(x) = 4 n arctan(e^-x); F(0) = n pi, exponential decay.
inline double kink_profile(double x, int n = 1) {
  if (x < 0.0)
    throw Error(ErrorCategory::InvalidParameter, "kink profile needs x >= 0");
  if (n != 1 && n != 2)
    throw Error(ErrorCategory::InvalidParameter, "kink winding must be 1 or 2");
  return 4.0 * n * std::atan(std::exp(-x));
}

// d/dx and d^2/dx^2 of the kink profile in closed form.
inline double kink_profile_d1(double x, int n = 1) {
  return -2.0 * n / std::cosh(x);
}
inline double kink_profile_d2(double x, int n = 1) {
  const double c = std::cosh(x);
  return 2.0 * n * std::sinh(x) / (c * c);
}

// Symmetry-breaking source term (the right-hand side of the static equation).
inline double sb_source(SbVariant v, double x, double F, const ModelParams& p) {
  switch (v) {
    case SbVariant::None: return 0.0;
    case SbVariant::PionMass: return p.beta_sq() / 4.0 * x * x * std::sin(F);
    case SbVariant::Modified:
      return p.epsilon * (p.beta_sq() / 4.0 * x * x * std::sin(F));
  }
  return 0.0;
}

// Left-hand side of the k=1 static hedgehog equation (no source):
//   xF'/2 + [x^2/4 + 2 sin^2F] F'' + sin2F F'^2 - sin2F/4 - sin^2F sin2F / x^2
inline double hedgehog_lhs(double x, double F, double Fp, double Fpp) {
  const double s = std::sin(F);
  const double s2 = std::sin(2.0 * F);
  return x * Fp / 2.0 + (x * x / 4.0 + 2.0 * s * s) * Fpp + s2 * Fp * Fp -
         s2 / 4.0 - s * s * s2 / (x * x);
}

// Left-hand side of the twisty static equation (no source):
//   [x^2 + 2a sin^2F] F'' + 2xF' + [a F'^2 - a/4 - 2b sin^2F/x^2] sin2F
// At k=1 (a=4, b=2) this is exactly 4 times the hedgehog form.
inline double twisty_lhs(double a, double b, double x, double F, double Fp,
                         double Fpp) {
  const double s = std::sin(F);
  const double s2 = std::sin(2.0 * F);
  return (x * x + 2.0 * a * s * s) * Fpp + 2.0 * x * Fp +
         (a * Fp * Fp - a / 4.0 - 2.0 * b * s * s / (x * x)) * s2;
}

// Left-hand side of the sixth-order static hedgehog equation (no source).
// The F''-coefficient gains (g6/4) sin^4F/x^2 and the F' term loses the
// sixth-order drag; `fp_coef` is gamma6/4 (Standard) or gamma6/2
// (Conservative).
inline double sixth_lhs(double g6, double fp_coef, double x, double F,
                        double Fp, double Fpp) {
  const double s = std::sin(F);
  const double s2 = std::sin(2.0 * F);
  const double ss = s * s;
  const double x2 = x * x;
  return (x2 / 4.0 + 2.0 * ss + g6 / 4.0 * ss * ss / x2) * Fpp +
         (s2 + g6 / 4.0 * ss * s2 / x2) * Fp * Fp +
         (x / 2.0 - fp_coef * ss * ss / (x2 * x)) * Fp - s2 / 4.0 -
         ss * s2 / x2;
}

// Residual of the selected static equation at one point, source subtracted.
// The equation is singular at x = 0; the origin node is boundary data.
inline double static_residual(const StaticEquationSpec& spec, double x,
                              double F, double Fp, double Fpp,
                              const ModelParams& p) {
  if (x <= 0.0)
    throw Error(ErrorCategory::InvalidParameter,
                "static equation is singular at x = 0");
  const double src = sb_source(spec.sb, x, F, p);
  if (spec.sixth_order) {
    const double g6 = p.gamma6();
    const double fp_coef =
        spec.sixth_force == SixthForce::Conservative ? g6 / 2.0 : g6 / 4.0;
    return sixth_lhs(g6, fp_coef, x, F, Fp, Fpp) - src;
  }
  if (spec.k == 1) return hedgehog_lhs(x, F, Fp, Fpp) - src;
  return twisty_lhs(spec.a(), spec.b(), x, F, Fp, Fpp) - src;
}

// F-double-dot of the time-dependent equation at one interior node. The
// quartic model is the gamma6 = 0 case of the same kernel, which keeps the
// reduction bit-exact. `fp_coef` follows the SixthForce convention above.
inline double acceleration_node(double x, double F, double Fp, double Fpp,
                                double Fdot, double eps_beta_sq_4, double g6,
                                double fp_coef) {
  const double s = std::sin(F);
  const double c = std::cos(F);
  const double s2 = 2.0 * s * c;
  const double ss = s * s;
  const double x2 = x * x;
  const double num = (x / 2.0 - fp_coef * ss * ss / (x2 * x)) * Fp +
                     (s2 + g6 / 4.0 * ss * s2 / x2) * (Fp * Fp - Fdot * Fdot) -
                     s2 / 4.0 - ss * s2 / x2 - eps_beta_sq_4 * x2 * s;
  const double den = x2 / 4.0 + 2.0 * ss + g6 / 4.0 * ss * ss / x2;
  return Fpp + num / den;
}

}  // namespace skyrmion
