// Mass functionals of the static configurations and the Hamiltonian of the
// time-dependent field. All energies are in units of gamma = pi F_pi / e.
//
// The theta integral of the axially symmetric energy density is done in
// closed form (integral of sin(theta) = 2), which reduces both masses to
// radial quadratures:
//   M2 = 1/2 Int { x^2 F'^2 + (k^2+1) sin^2F } dx
//   M4 = Int { 2(k^2+1) sin^2F F'^2 + 2 k^2 sin^4F / x^2 } dx
// The printed ambiguity in the quartic bracket is exposed as M4Reading: the
// primary reading reduces to the hedgehog energy at k=1; the alternate one
// weights the k^2 F'^2 term with sin^2(theta) (theta integral 4/3).
#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "skydyn/numerics.hpp"
#include "skydyn/profile.hpp"

namespace skyrmion {

enum class M4Reading { Primary, Alternate };

inline const char* m4_reading_name(M4Reading r) {
  return r == M4Reading::Primary ? "primary" : "alternate";
}

struct MassBreakdown {
  double m2 = 0.0;
  double m4 = 0.0;
  double total = 0.0;
  int k = 1;
};

namespace detail {

// F(0) must sit on a multiple of pi or the x -> 0 limits of sin^2F/x^2 and
// sin^4F/x^4 diverge.
inline void check_origin(const Profile& pr) {
  const double r = std::remainder(pr.values.front(), std::numbers::pi);
  if (std::abs(r) > 1e-9)
    throw Error(ErrorCategory::InvalidParameter,
                "profile F(0) must be a multiple of pi");
}

}  // namespace detail

inline double mass_m2(const Profile& pr, int k) {
  detail::check_origin(pr);
  const double h = pr.grid.spacing();
  const auto Fp = derivative_on_grid(pr.values, h);
  std::vector<double> density(pr.values.size());
  for (std::size_t i = 0; i < pr.values.size(); ++i) {
    const double x = pr.grid.x(static_cast<int>(i));
    const double s = std::sin(pr.values[i]);
    density[i] = 0.5 * (x * x * Fp[i] * Fp[i] + (k * k + 1) * s * s);
  }
  return integrate_simpson(density, h);
}

inline double mass_m4(const Profile& pr, int k,
                      M4Reading reading = M4Reading::Primary) {
  detail::check_origin(pr);
  const double h = pr.grid.spacing();
  const auto Fp = derivative_on_grid(pr.values, h);
  // theta weight on the k^2 F'^2 term: 2 (primary) or 4/3 (alternate).
  const double kk_weight = reading == M4Reading::Primary ? 2.0 * k * k
                                                         : (4.0 / 3.0) * k * k;
  std::vector<double> density(pr.values.size());
  for (std::size_t i = 0; i < pr.values.size(); ++i) {
    const double x = pr.grid.x(static_cast<int>(i));
    const double ss = std::sin(pr.values[i]) * std::sin(pr.values[i]);
    // sin^4F/x^2 -> F'(0)^4 x^2 -> 0 at the origin node (F(0) = n pi).
    const double s4x2 = i == 0 ? 0.0 : ss * ss / (x * x);
    density[i] = (kk_weight + 2.0) * ss * Fp[i] * Fp[i] + 2.0 * k * k * s4x2;
  }
  return integrate_simpson(density, h);
}

inline MassBreakdown mass_breakdown(const Profile& pr, int k,
                                    M4Reading reading = M4Reading::Primary) {
  MassBreakdown mb;
  mb.k = k;
  mb.m2 = mass_m2(pr, k);
  mb.m4 = mass_m4(pr, k, reading);
  mb.total = mb.m2 + mb.m4;
  return mb;
}

// Hamiltonian of a dynamic state, Simpson quadrature in gamma units:
//   H = Int { (x^2/2)(Fdot^2 + F'^2) + sin^2F + 4 sin^2F (Fdot^2 + F'^2)
//             + 2 sin^4F/x^2 [+ (g6/2)(sin^4F/x^2)(Fdot^2+F'^2)]
//             + eps beta^2 x^2 (1 - cosF) } dx
// The g6 term is the sixth-order energy; include_gamma6 = false evaluates the
// quartic Hamiltonian exactly.
inline double hamiltonian(const Grid& grid, const std::vector<double>& F,
                          const std::vector<double>& Fdot,
                          const ModelParams& p, bool include_gamma6 = false) {
  const double h = grid.spacing();
  const auto Fp = derivative_on_grid(F, h);
  const double eb2 = p.epsilon * p.beta_sq();
  const double g6 = include_gamma6 ? p.gamma6() : 0.0;
  std::vector<double> density(F.size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    const double x = grid.x(static_cast<int>(i));
    const double s = std::sin(F[i]);
    const double ss = s * s;
    const double kin = Fdot[i] * Fdot[i] + Fp[i] * Fp[i];
    const double s4x2 = i == 0 ? 0.0 : ss * ss / (x * x);
    density[i] = x * x / 2.0 * kin + ss + 4.0 * ss * kin + 2.0 * s4x2 +
                 g6 / 2.0 * s4x2 * kin + eb2 * x * x * (1.0 - std::cos(F[i]));
  }
  return integrate_simpson(density, h);
}

}  // namespace skyrmion
