// Method-of-lines time integration of the time-dependent profile equations.
//
// Interior nodes follow F-ddot = acceleration_node(...) with central
// differences for F' and F''; the boundary nodes are pinned (F(0) = n pi,
// F(L) = 0, Fdot = 0 at both ends). Classical RK4 with a fixed step.
#pragma once

#include <algorithm>
#include <cmath>
#include <memory>
#include <vector>

#include "skydyn/energy.hpp"
#include "skydyn/model.hpp"
#include "skydyn/profile.hpp"
#include "skydyn/spectral.hpp"

namespace skyrmion {

enum class DynamicsModel { Quartic, Sixth };

inline const char* model_name(DynamicsModel m) {
  return m == DynamicsModel::Quartic ? "quartic" : "sixth";
}

struct FieldState {
  Grid grid;
  std::vector<double> f;     // F(x_i, t)
  std::vector<double> fdot;  // dF/dt(x_i, t)
  double t = 0.0;
};

struct EvolutionConfig {
  DynamicsModel model = DynamicsModel::Quartic;
  SixthForce sixth_force = SixthForce::Standard;
  double dt = 1e-3;
  double t_end = 500.0;
  std::vector<double> snapshot_times = {0, 100, 200, 300, 500};
  int perturb_mode = 16;
  double perturb_amp = 0.1;
  Profile base_profile;
  double sample_dt = 0.25;   // cadence of the diagnostic snapshots
  int energy_every = 100;    // energy-log stride in steps
  double blowup_max_f = 1e3;

  void validate() const {
    if (!(dt > 0.0)) throw Error(ErrorCategory::Validation, "dt must be positive");
    if (t_end < 0.0)
      throw Error(ErrorCategory::Validation, "t_end must be non-negative");
    if (perturb_mode < 1 || perturb_mode >= base_profile.grid.intervals)
      throw Error(ErrorCategory::Validation,
                  "perturbation mode must lie in 1..N-1");
    for (double ts : snapshot_times)
      if (ts < 0.0 || ts > t_end)
        throw Error(ErrorCategory::Validation,
                    "snapshot times must lie in [0, t_end]");
  }
};

struct EnergySample {
  double t;
  double h;
};

struct Trajectory {
  std::vector<FieldState> snapshots;       // dense diagnostic samples
  std::vector<std::size_t> requested;      // indices of the requested times
  std::vector<double> requested_times;     // the times that were asked for
  std::vector<EnergySample> energy_log;
  EvolutionConfig config;
};

// Blow-up failure; carries the time, the runaway amplitude and whatever part
// of the trajectory had been recorded.
class BlowUpError : public Error {
 public:
  BlowUpError(double t, double max_f, std::shared_ptr<Trajectory> partial)
      : Error(ErrorCategory::BlowUp,
              "field blow-up at t = " + std::to_string(t) +
                  " (max |F| = " + std::to_string(max_f) + ")"),
        t_(t), max_f_(max_f), partial_(std::move(partial)) {}
  double t() const { return t_; }
  double max_f() const { return max_f_; }
  const std::shared_ptr<Trajectory>& partial_trajectory() const { return partial_; }

 private:
  double t_, max_f_;
  std::shared_ptr<Trajectory> partial_;
};

// Initial state: F = base + A sin(j pi x / L), Fdot = 0. The sine vanishes at
// both walls, so the boundary values are inherited from the base exactly.
inline FieldState init_perturbed(const Profile& base, int mode, double amp) {
  const int n = base.grid.intervals;
  if (mode < 1 || mode > n - 1)
    throw Error(ErrorCategory::Validation,
                "perturbation mode must lie in 1..N-1 (mode " +
                    std::to_string(mode) + ", N = " + std::to_string(n) + ")");
  FieldState st;
  st.grid = base.grid;
  st.t = 0.0;
  st.f = base.values;
  st.fdot.assign(base.values.size(), 0.0);
  SineTable table(n);
  for (int i = 1; i < n; ++i) st.f[i] += amp * table.sin_ji(mode, i);
  return st;
}

namespace detail {

struct AccelContext {
  double eps_beta_sq_4;
  double gamma6;
  double fp_coef;
};

inline AccelContext make_context(DynamicsModel model, SixthForce force,
                                 const ModelParams& p) {
  AccelContext c{};
  c.eps_beta_sq_4 = p.epsilon * p.beta_sq() / 4.0;
  c.gamma6 = model == DynamicsModel::Sixth ? p.gamma6() : 0.0;
  c.fp_coef = force == SixthForce::Conservative ? c.gamma6 / 2.0 : c.gamma6 / 4.0;
  return c;
}

inline void accelerations(const Grid& g, const std::vector<double>& F,
                          const std::vector<double>& Fd, const AccelContext& c,
                          std::vector<double>& out) {
  const int n = g.intervals;
  const double h = g.spacing();
  out.resize(F.size());
  out[0] = 0.0;
  out[n] = 0.0;
  for (int i = 1; i < n; ++i) {
    const double Fp = (F[i + 1] - F[i - 1]) / (2.0 * h);
    const double Fpp = (F[i + 1] - 2.0 * F[i] + F[i - 1]) / (h * h);
    out[i] = acceleration_node(g.x(i), F[i], Fp, Fpp, Fd[i], c.eps_beta_sq_4,
                               c.gamma6, c.fp_coef);
  }
}

struct StepBuffers {
  std::vector<double> k1, k2, k3, k4, tf, tfd;
};

// One RK4 step on (F, Fdot) in place; boundary nodes pass through unchanged.
inline void rk4_step_inplace(const Grid& g, std::vector<double>& F,
                             std::vector<double>& Fd, double dt,
                             const AccelContext& c, StepBuffers& b) {
  const int n = g.intervals;
  accelerations(g, F, Fd, c, b.k1);
  b.tf.resize(F.size());
  b.tfd.resize(F.size());
  for (int i = 0; i <= n; ++i) {
    b.tf[i] = F[i] + 0.5 * dt * Fd[i];
    b.tfd[i] = Fd[i] + 0.5 * dt * b.k1[i];
  }
  accelerations(g, b.tf, b.tfd, c, b.k2);
  for (int i = 0; i <= n; ++i) {
    b.tf[i] = F[i] + 0.5 * dt * (Fd[i] + 0.5 * dt * b.k1[i]);
    b.tfd[i] = Fd[i] + 0.5 * dt * b.k2[i];
  }
  accelerations(g, b.tf, b.tfd, c, b.k3);
  for (int i = 0; i <= n; ++i) {
    b.tf[i] = F[i] + dt * (Fd[i] + 0.5 * dt * b.k2[i]);
    b.tfd[i] = Fd[i] + dt * b.k3[i];
  }
  accelerations(g, b.tf, b.tfd, c, b.k4);
  for (int i = 1; i < n; ++i) {
    F[i] += dt * (Fd[i] + dt / 6.0 * (b.k1[i] + b.k2[i] + b.k3[i]));
    Fd[i] += dt / 6.0 * (b.k1[i] + 2.0 * b.k2[i] + 2.0 * b.k3[i] + b.k4[i]);
  }
}

inline double max_abs_f(const std::vector<double>& F) {
  double m = 0.0;
  for (double v : F) m = std::max(m, std::abs(v));
  return m;
}

inline bool all_finite(const std::vector<double>& F) {
  for (double v : F)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace detail

// Per-node F-ddot of the quartic model (gamma6 = 0 path of the kernel).
inline std::vector<double> acceleration_quartic(const FieldState& st,
                                                const ModelParams& p) {
  std::vector<double> out;
  detail::accelerations(st.grid, st.f, st.fdot,
                        detail::make_context(DynamicsModel::Quartic,
                                             SixthForce::Standard, p),
                        out);
  return out;
}

inline std::vector<double> acceleration_sixth(
    const FieldState& st, const ModelParams& p,
    SixthForce force = SixthForce::Standard) {
  std::vector<double> out;
  detail::accelerations(st.grid, st.f, st.fdot,
                        detail::make_context(DynamicsModel::Sixth, force, p),
                        out);
  return out;
}

// One RK4 step; throws BlowUpError on a non-finite or runaway field.
inline FieldState step_rk4(const FieldState& st, double dt, DynamicsModel model,
                           const ModelParams& p,
                           SixthForce force = SixthForce::Standard,
                           double blowup_max_f = 1e3) {
  if (!(dt > 0.0)) throw Error(ErrorCategory::Validation, "dt must be positive");
  FieldState next = st;
  detail::StepBuffers buf;
  detail::rk4_step_inplace(st.grid, next.f, next.fdot, dt,
                           detail::make_context(model, force, p), buf);
  next.t = st.t + dt;
  const double mf = detail::max_abs_f(next.f);
  if (!detail::all_finite(next.f) || !detail::all_finite(next.fdot) ||
      mf > blowup_max_f)
    throw BlowUpError(next.t, mf, nullptr);
  return next;
}

// Integrate from t = 0 to t_end. Diagnostic snapshots are recorded every
// sample_dt; each requested snapshot time is mapped to the first step with
// t >= requested and its actual time recorded.
inline Trajectory evolve(const EvolutionConfig& config, const ModelParams& p) {
  config.validate();
  config.base_profile.validate_boundaries();
  const Grid& g = config.base_profile.grid;
  auto traj = std::make_shared<Trajectory>();
  traj->config = config;

  FieldState st = init_perturbed(config.base_profile, config.perturb_mode,
                                 config.perturb_amp);
  const long nsteps = std::lround(config.t_end / config.dt);
  const long sample_stride =
      std::max<long>(1, std::lround(config.sample_dt / config.dt));
  std::vector<double> wanted = config.snapshot_times;
  std::sort(wanted.begin(), wanted.end());
  std::size_t next_wanted = 0;

  const auto ctx = detail::make_context(config.model, config.sixth_force, p);
  detail::StepBuffers buf;
  const bool with_g6 = config.model == DynamicsModel::Sixth;

  for (long step = 0;; ++step) {
    st.t = step * config.dt;
    const bool dense = step % sample_stride == 0 || step == nsteps;
    std::vector<double> served;  // requested times first reached at this step
    while (next_wanted < wanted.size() &&
           st.t >= wanted[next_wanted] - 0.5 * config.dt) {
      served.push_back(wanted[next_wanted]);
      ++next_wanted;
    }
    if (dense || !served.empty()) {
      traj->snapshots.push_back(st);
      for (double w : served) {
        traj->requested.push_back(traj->snapshots.size() - 1);
        traj->requested_times.push_back(w);
      }
    }
    if (step % config.energy_every == 0 || step == nsteps)
      traj->energy_log.push_back(
          {st.t, hamiltonian(g, st.f, st.fdot, p, with_g6)});
    if (step == nsteps) break;

    detail::rk4_step_inplace(g, st.f, st.fdot, config.dt, ctx, buf);
    const double mf = detail::max_abs_f(st.f);
    if (!detail::all_finite(st.f) || !detail::all_finite(st.fdot) ||
        mf > config.blowup_max_f) {
      st.t = (step + 1) * config.dt;
      traj->snapshots.push_back(st);  // diagnostic snapshot of the failure
      throw BlowUpError(st.t, mf, traj);
    }
  }
  return std::move(*traj);
}

// A_j(t) series for the requested modes, delta F measured against `base`.
inline std::vector<ModeHistory> mode_history(const Trajectory& traj,
                                             const Profile& base,
                                             const std::vector<int>& modes) {
  std::vector<ModeHistory> out;
  if (modes.empty()) return out;
  for (const FieldState& st : traj.snapshots)
    if (!(st.grid == base.grid))
      throw Error(ErrorCategory::Validation,
                  "trajectory and base profile use different grids");
  const int n = base.grid.intervals;
  for (int m : modes) {
    if (m < 1 || m > n - 1)
      throw Error(ErrorCategory::Validation, "mode index out of range");
    out.push_back({m, {}, {}});
  }
  SineTable table(n);
  std::vector<double> df(base.values.size());
  for (const FieldState& st : traj.snapshots) {
    for (std::size_t i = 0; i < df.size(); ++i)
      df[i] = st.f[i] - base.values[i];
    df[0] = 0.0;
    df[n] = 0.0;
    for (std::size_t k = 0; k < modes.size(); ++k) {
      double acc = 0.0;
      for (int i = 1; i < n; ++i) acc += df[i] * table.sin_ji(modes[k], i);
      out[k].t.push_back(st.t);
      out[k].amplitude.push_back(2.0 * acc / n);
    }
  }
  return out;
}

}  // namespace skyrmion
