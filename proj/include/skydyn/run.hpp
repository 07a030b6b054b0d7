// Command implementations behind the CLI: each one executes a configured run
// and writes its artifacts under the output directory, plus a manifest of
// what completed. Identical configurations produce byte-identical data files.
#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "skydyn/config.hpp"
#include "skydyn/io.hpp"

namespace skyrmion {

namespace fs = std::filesystem;

namespace detail {

inline void write_manifest(const fs::path& dir, const std::string& command,
                           const std::vector<std::string>& files,
                           const std::string& status) {
  std::ostringstream out;
  out << "# skydyn run manifest\n";
  out << "command: " << command << "\n";
  out << "status: " << status << "\n";
  for (const auto& f : files) out << "file: " << f << "\n";
  write_text(dir / "manifest.txt", out.str());
}

inline fs::path prepare_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw Error(ErrorCategory::Io, "cannot create " + p.string());
  return p;
}

}  // namespace detail

// `static`: solve the configured profile equation, write the (x, F) dat file.
inline std::vector<std::string> run_static(const RunConfig& cfg) {
  cfg.validate();
  const fs::path dir = detail::prepare_dir(cfg.out_dir);
  StaticEquationSpec spec;
  spec.k = cfg.k;
  spec.winding = cfg.winding;
  spec.sb = cfg.variant;
  spec.sixth_order = cfg.model == DynamicsModel::Sixth;
  spec.sixth_force = cfg.sixth_force;
  Profile pr = solve_static(spec, cfg.grid(), cfg.params());
  std::ostringstream name;
  name << "profile_" << sb_variant_name(spec.sb) << "_k" << spec.k << "_n"
       << spec.winding;
  if (spec.sixth_order) name << "_sixth-" << sixth_force_name(spec.sixth_force);
  name << ".dat";
  write_profile(dir / name.str(), pr);
  std::vector<std::string> files{name.str()};
  detail::write_manifest(dir, "static", files, "ok");
  return files;
}

// `mass-table`: the four B=2 cases.
//   a: kink profile, n=2, k=1      b: kink profile, n=1, k=2
//   c: solved k=2, pion-mass SB    d: solved k=2, rescaled SB
inline std::vector<std::string> run_mass_table(const RunConfig& cfg) {
  cfg.validate();
  const fs::path dir = detail::prepare_dir(cfg.out_dir);
  const Grid grid = cfg.grid();
  const ModelParams params = cfg.params();
  std::vector<MassTableRow> rows;

  auto kink_case = [&](const std::string& label, int n, int k) {
    StaticEquationSpec spec;
    spec.k = k;
    spec.winding = n;
    spec.sb = SbVariant::None;
    Profile pr = profile_from_function(
        grid, [n](double x) { return kink_profile(x, n); }, spec);
    rows.push_back({label, k, "none", mass_breakdown(pr, k, cfg.m4_reading)});
  };
  auto solved_case = [&](const std::string& label, SbVariant v) {
    StaticEquationSpec spec;
    spec.k = 2;
    spec.winding = 1;
    spec.sb = v;
    try {
      Profile pr = solve_static(spec, grid, params);
      rows.push_back({label, 2, sb_variant_name(v),
                      mass_breakdown(pr, 2, cfg.m4_reading)});
    } catch (const Error& err) {
      throw Error(err.category(), "case " + label + ": " + err.what());
    }
  };

  kink_case("a", 2, 1);
  kink_case("b", 1, 2);
  solved_case("c", SbVariant::PionMass);
  solved_case("d", SbVariant::Modified);

  write_mass_table(dir / "mass_table.dat", rows, grid, cfg.m4_reading);
  std::vector<std::string> files{"mass_table.dat"};
  detail::write_manifest(dir, "mass-table", files, "ok");
  return files;
}

// `compare-kink`: residual of the kink profile against both sources.
inline std::vector<std::string> run_compare_kink(const RunConfig& cfg) {
  cfg.validate();
  const fs::path dir = detail::prepare_dir(cfg.out_dir);
  KinkComparison kc = kink_comparison(cfg.grid(), cfg.params());
  write_kink_comparison(dir / "kink_comparison.dat", kc, cfg.grid());
  std::vector<std::string> files{"kink_comparison.dat"};
  detail::write_manifest(dir, "compare-kink", files, "ok");
  return files;
}

// `evolve`: solve the matching static base, perturb, integrate, and emit the
// requested snapshots, the energy log and the mode histories. On blow-up the
// partial artifacts are kept and the manifest records the failure.
inline std::vector<std::string> run_evolution_suite(const RunConfig& cfg) {
  cfg.validate();
  const fs::path dir = detail::prepare_dir(cfg.out_dir);
  const Grid grid = cfg.grid();
  const ModelParams params = cfg.params();

  StaticEquationSpec spec;
  spec.k = 1;
  spec.winding = 1;
  spec.sb = cfg.variant;
  spec.sixth_order = cfg.model == DynamicsModel::Sixth;
  spec.sixth_force = cfg.sixth_force;
  Profile base = solve_static(spec, grid, params);

  EvolutionConfig ec;
  ec.model = cfg.model;
  ec.sixth_force = cfg.sixth_force;
  ec.dt = cfg.dt;
  ec.t_end = cfg.effective_t_end();
  ec.snapshot_times = cfg.snapshot_times();
  ec.perturb_mode = cfg.mode;
  ec.perturb_amp = cfg.amplitude;
  ec.base_profile = base;

  const std::string tag = run_tag(cfg.model, cfg.mode, cfg.amplitude, cfg.dt);
  std::vector<std::string> files;
  auto emit = [&](const Trajectory& traj, const std::string& status) {
    for (std::size_t s = 0; s < traj.requested.size(); ++s) {
      const FieldState& st = traj.snapshots[traj.requested[s]];
      std::ostringstream name;
      name << "snapshot_" << tag << "_t" << format_compact(traj.requested_times[s])
           << ".dat";
      write_snapshot(dir / name.str(), st, base, traj.requested_times[s], tag);
      files.push_back(name.str());
    }
    const std::string elog = "energy_" + tag + ".dat";
    write_energy_log(dir / elog, traj.energy_log, tag);
    files.push_back(elog);
    auto histories = mode_history(traj, base, cfg.history_modes());
    for (const auto& mh : histories) {
      std::ostringstream name;
      name << "mode_" << tag << "_m" << mh.mode << ".dat";
      write_mode_history(dir / name.str(), mh, tag);
      files.push_back(name.str());
    }
    detail::write_manifest(dir, "evolve", files, status);
  };

  try {
    Trajectory traj = evolve(ec, params);
    emit(traj, "ok");
  } catch (const BlowUpError& bl) {
    if (bl.partial_trajectory()) emit(*bl.partial_trajectory(), bl.what());
    throw;
  }
  return files;
}

// `spectrum`: sine-mode amplitudes of the fluctuation column of a snapshot.
inline std::vector<std::string> run_spectrum(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.input.empty())
    throw Error(ErrorCategory::Validation, "spectrum needs --input <snapshot.dat>");
  const fs::path dir = detail::prepare_dir(cfg.out_dir);
  SnapshotFile snap = read_snapshot(cfg.input);
  const int n = static_cast<int>(snap.x.size()) - 1;
  if (n < 16) throw Error(ErrorCategory::Parse, "snapshot too small");
  Grid grid(snap.x.back(), n);
  ModeSpectrum sp = mode_amplitudes(snap.df, grid);
  sp.t = snap.t;
  const std::string stem = fs::path(cfg.input).stem().string();
  const std::string name = "spectrum_" + stem + ".dat";
  write_spectrum(dir / name, sp, fs::path(cfg.input).filename().string());
  std::vector<std::string> files{name};
  detail::write_manifest(dir, "spectrum", files, "ok");
  return files;
}

inline std::vector<std::string> run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Static: return run_static(cfg);
    case Command::MassTable: return run_mass_table(cfg);
    case Command::CompareKink: return run_compare_kink(cfg);
    case Command::Evolve: return run_evolution_suite(cfg);
    case Command::Spectrum: return run_spectrum(cfg);
  }
  throw Error(ErrorCategory::Validation, "unknown command");
}

}  // namespace skyrmion
