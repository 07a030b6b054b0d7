// Time integration: RK4 order, fixed points, reversal, conservation in the
// resolved regime, boundary pinning, the sixth-order reduction, and blow-up.
#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "skydyn/dynamics.hpp"
#include "skydyn/static_solver.hpp"

using namespace skyrmion;

namespace {
const Grid kGrid(16.0, 128);
const ModelParams kParams;

const Profile& quartic_base() {
  static Profile base = solve_static({}, kGrid, kParams);  // k=1 modified
  return base;
}

EvolutionConfig config_with(DynamicsModel m, double t_end, double dt = 1e-3) {
  EvolutionConfig ec;
  ec.model = m;
  ec.dt = dt;
  ec.t_end = t_end;
  ec.snapshot_times = {0.0, t_end};
  ec.base_profile = quartic_base();
  return ec;
}
}  // namespace

TEST_CASE("perturbed initial state", "[dynamics]") {
  FieldState st = init_perturbed(quartic_base(), 16, 0.1);
  ModeSpectrum sp = mode_amplitudes([&] {
    std::vector<double> df(st.f.size());
    for (std::size_t i = 0; i < df.size(); ++i)
      df[i] = st.f[i] - quartic_base().values[i];
    return df;
  }(), kGrid);
  CHECK(sp.amplitudes[15] == Catch::Approx(0.1).epsilon(1e-12));
  for (int j = 1; j < kGrid.intervals; ++j)
    if (j != 16) CHECK(std::abs(sp.amplitudes[j - 1]) < 1e-12);
  for (double v : st.fdot) CHECK(v == 0.0);

  FieldState same = init_perturbed(quartic_base(), 16, 0.0);
  CHECK(same.f == quartic_base().values);

  CHECK_THROWS_AS(init_perturbed(quartic_base(), 128, 0.1), Error);
  CHECK_THROWS_AS(init_perturbed(quartic_base(), 0, 0.1), Error);
}

TEST_CASE("acceleration vanishes on static solutions and the vacuum", "[dynamics]") {
  FieldState st;
  st.grid = kGrid;
  st.f = quartic_base().values;
  st.fdot.assign(kGrid.nodes(), 0.0);
  for (double a : acceleration_quartic(st, kParams)) CHECK(std::abs(a) < 1e-8);

  FieldState vac;
  vac.grid = kGrid;
  vac.f.assign(kGrid.nodes(), 0.0);
  vac.fdot.assign(kGrid.nodes(), 0.0);
  for (double a : acceleration_quartic(vac, kParams)) CHECK(a == 0.0);
  for (double a : acceleration_sixth(vac, kParams)) CHECK(a == 0.0);
}

TEST_CASE("sixth model reduces to quartic bit-for-bit at zero coupling", "[dynamics]") {
  ModelParams p0 = kParams;
  p0.eps6_sq = 0.0;
  FieldState st = init_perturbed(quartic_base(), 16, 0.1);
  st.fdot[5] = 0.3;  // exercise the Fdot terms too
  auto aq = acceleration_quartic(st, p0);
  auto a6 = acceleration_sixth(st, p0);
  REQUIRE(aq.size() == a6.size());
  for (std::size_t i = 0; i < aq.size(); ++i) CHECK(aq[i] == a6[i]);

  // full trajectories agree bitwise as well
  EvolutionConfig eq = config_with(DynamicsModel::Quartic, 1.0);
  EvolutionConfig e6 = config_with(DynamicsModel::Sixth, 1.0);
  Trajectory tq = evolve(eq, p0);
  Trajectory t6 = evolve(e6, p0);
  CHECK(tq.snapshots.back().f == t6.snapshots.back().f);
  CHECK(tq.snapshots.back().fdot == t6.snapshots.back().fdot);
}

TEST_CASE("static state is a fixed point of the step", "[dynamics]") {
  FieldState st;
  st.grid = kGrid;
  st.f = quartic_base().values;
  st.fdot.assign(kGrid.nodes(), 0.0);
  FieldState next = step_rk4(st, 1e-2, DynamicsModel::Quartic, kParams);
  double worst = 0.0;
  for (std::size_t i = 0; i < st.f.size(); ++i)
    worst = std::max(worst, std::abs(next.f[i] - st.f[i]));
  CHECK(worst < 1e-8);
}

TEST_CASE("rk4 local order via step halving", "[dynamics]") {
  // two half steps vs one full step differ at O(dt^5) per node
  auto defect = [&](double dt) {
    FieldState st = init_perturbed(quartic_base(), 16, 0.1);
    FieldState one = step_rk4(st, dt, DynamicsModel::Quartic, kParams);
    FieldState half = step_rk4(st, dt / 2, DynamicsModel::Quartic, kParams);
    half = step_rk4(half, dt / 2, DynamicsModel::Quartic, kParams);
    double worst = 0.0;
    for (std::size_t i = 0; i < one.f.size(); ++i)
      worst = std::max(worst, std::abs(one.f[i] - half.f[i]));
    return worst;
  };
  const double d1 = defect(1e-2), d2 = defect(5e-3);
  CHECK(d1 / d2 == Catch::Approx(32.0).margin(14.0));
}

TEST_CASE("boundary nodes are pinned through the evolution", "[dynamics]") {
  EvolutionConfig ec = config_with(DynamicsModel::Quartic, 2.0);
  Trajectory traj = evolve(ec, kParams);
  for (const auto& st : traj.snapshots) {
    CHECK(st.f.front() == std::numbers::pi);
    CHECK(st.f.back() == 0.0);
    CHECK(st.fdot.front() == 0.0);
    CHECK(st.fdot.back() == 0.0);
  }
}

TEST_CASE("time reversal returns the initial field", "[dynamics]") {
  EvolutionConfig fwd = config_with(DynamicsModel::Quartic, 5.0);
  Trajectory traj = evolve(fwd, kParams);
  FieldState mid = traj.snapshots.back();
  for (auto& v : mid.fdot) v = -v;
  detail::StepBuffers buf;
  const auto ctx =
      detail::make_context(DynamicsModel::Quartic, SixthForce::Standard, kParams);
  for (int s = 0; s < 5000; ++s)
    detail::rk4_step_inplace(kGrid, mid.f, mid.fdot, 1e-3, ctx, buf);
  const FieldState start = init_perturbed(quartic_base(), 16, 0.1);
  double worst = 0.0;
  for (std::size_t i = 0; i < mid.f.size(); ++i)
    worst = std::max(worst, std::abs(mid.f[i] - start.f[i]));
  CHECK(worst < 1e-9);
}

TEST_CASE("energy conservation in the resolved regime", "[dynamics]") {
  // a small-amplitude run is spatially resolved: the Hamiltonian drift is
  // pure time-integration error
  EvolutionConfig ec = config_with(DynamicsModel::Quartic, 20.0);
  ec.perturb_amp = 1e-3;
  Trajectory traj = evolve(ec, kParams);
  const double h0 = traj.energy_log.front().h;
  double drift = 0.0;
  for (const auto& s : traj.energy_log)
    drift = std::max(drift, std::abs(s.h - h0) / std::abs(h0));
  CHECK(drift < 1e-5);
}

TEST_CASE("dt halving leaves the resolved trajectory unchanged", "[dynamics]") {
  auto run = [&](double dt) {
    EvolutionConfig ec = config_with(DynamicsModel::Quartic, 10.0, dt);
    return evolve(ec, kParams).snapshots.back().f;
  };
  auto a = run(1e-3), b = run(5e-4);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  CHECK(worst < 1e-6);
}

TEST_CASE("evolve bookkeeping", "[dynamics]") {
  EvolutionConfig ec = config_with(DynamicsModel::Quartic, 0.0);
  ec.snapshot_times = {0.0};
  Trajectory traj = evolve(ec, kParams);
  REQUIRE(traj.snapshots.size() == 1);
  CHECK(traj.snapshots[0].t == 0.0);
  CHECK(traj.requested_times == std::vector<double>{0.0});

  EvolutionConfig e2 = config_with(DynamicsModel::Quartic, 5.0);
  e2.snapshot_times = {0.0, 2.5, 5.0};
  Trajectory t2 = evolve(e2, kParams);
  REQUIRE(t2.requested.size() == 3);
  for (std::size_t s = 0; s < 3; ++s)
    CHECK(std::abs(t2.snapshots[t2.requested[s]].t - t2.requested_times[s]) <=
          e2.dt);
  // energy log at least every 100 steps
  CHECK(t2.energy_log.size() >= 50);
  for (std::size_t i = 1; i < t2.snapshots.size(); ++i)
    CHECK(t2.snapshots[i].t > t2.snapshots[i - 1].t);
}

TEST_CASE("blow-up is detected and reported", "[dynamics]") {
  EvolutionConfig ec = config_with(DynamicsModel::Quartic, 50.0, 0.5);
  ec.perturb_amp = 1.0;  // far above the stability limit at this step
  bool thrown = false;
  try {
    evolve(ec, kParams);
  } catch (const BlowUpError& err) {
    thrown = true;
    CHECK(err.t() > 0.0);
    CHECK((err.max_f() > 1e3 || !std::isfinite(err.max_f())));
    REQUIRE(err.partial_trajectory() != nullptr);
    CHECK(!err.partial_trajectory()->snapshots.empty());
  }
  CHECK(thrown);
}

TEST_CASE("mode history across a short run", "[dynamics]") {
  EvolutionConfig ec = config_with(DynamicsModel::Quartic, 1.0);
  Trajectory traj = evolve(ec, kParams);
  auto histories = mode_history(traj, quartic_base(), {8, 16});
  REQUIRE(histories.size() == 2);
  CHECK(histories[1].mode == 16);
  CHECK(histories[1].amplitude.front() == Catch::Approx(0.1).epsilon(1e-12));
  CHECK(std::abs(histories[0].amplitude.front()) < 1e-12);
  CHECK(mode_history(traj, quartic_base(), {}).empty());

  Profile other = quartic_base();
  other.grid = Grid(16.0, 64);
  other.values.resize(65);
  CHECK_THROWS_AS(mode_history(traj, other, {8}), Error);
}
