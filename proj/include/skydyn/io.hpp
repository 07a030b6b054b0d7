// Plain-text data files. Every file carries '#' header lines echoing the
// producing configuration and a '# columns:' line, and every writer has a
// matching reader so files round-trip. Numbers are printed with %.17g, which
// makes repeated runs byte-identical.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "skydyn/dynamics.hpp"
#include "skydyn/errors.hpp"
#include "skydyn/profile.hpp"
#include "skydyn/static_solver.hpp"

namespace skyrmion {

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Compact float for filenames (0.1 stays "0.1").
inline std::string format_compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

namespace detail {

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCategory::Io, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

struct ParsedTable {
  std::map<std::string, std::string> header;  // key: value lines
  std::vector<std::vector<double>> rows;      // numeric columns
  std::vector<std::vector<std::string>> raw_rows;
};

inline ParsedTable read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCategory::Io, "cannot open " + path.string());
  ParsedTable t;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::size_t colon = line.find(':');
      if (colon != std::string::npos) {
        std::string key = line.substr(1, colon - 1);
        std::string value = line.substr(colon + 1);
        auto strip = [](std::string s) {
          while (!s.empty() && s.front() == ' ') s.erase(s.begin());
          while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.pop_back();
          return s;
        };
        t.header[strip(key)] = strip(value);
      }
      continue;
    }
    std::istringstream ls(line);
    std::vector<std::string> raw;
    std::vector<double> nums;
    std::string tok;
    bool numeric = true;
    while (ls >> tok) {
      raw.push_back(tok);
      try {
        std::size_t pos = 0;
        nums.push_back(std::stod(tok, &pos));
        if (pos != tok.size()) numeric = false;
      } catch (...) {
        numeric = false;
      }
    }
    if (raw.empty()) continue;
    t.raw_rows.push_back(raw);
    if (numeric) t.rows.push_back(nums);
    else t.rows.push_back({});
  }
  return t;
}

}  // namespace detail

// ---- profile files ---------------------------------------------------------

inline void write_profile(const std::filesystem::path& path, const Profile& pr) {
  std::ostringstream out;
  out << "# skydyn profile\n";
  out << "# spec: k=" << pr.spec.k << " n=" << pr.spec.winding << " variant="
      << sb_variant_name(pr.spec.sb)
      << " sixth=" << (pr.spec.sixth_order ? sixth_force_name(pr.spec.sixth_force)
                                           : "off")
      << "\n";
  out << "# grid: L=" << format_double(pr.grid.length) << " N=" << pr.grid.intervals
      << "\n";
  out << "# residual_norm: " << format_double(pr.residual_norm) << "\n";
  out << "# monotone: " << (pr.monotone ? 1 : 0) << "\n";
  out << "# columns: x F\n";
  for (int i = 0; i < pr.grid.nodes(); ++i)
    out << format_double(pr.grid.x(i)) << " " << format_double(pr.values[i]) << "\n";
  detail::write_text(path, out.str());
}

struct ProfileFile {
  std::vector<double> x;
  std::vector<double> f;
  std::map<std::string, std::string> header;
};

inline ProfileFile read_profile(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  ProfileFile pf;
  pf.header = t.header;
  for (const auto& row : t.rows) {
    if (row.size() != 2)
      throw Error(ErrorCategory::Parse, "profile row needs 2 columns in " + path.string());
    pf.x.push_back(row[0]);
    pf.f.push_back(row[1]);
  }
  return pf;
}

// ---- mass table -------------------------------------------------------------

struct MassTableRow {
  std::string label;  // a, b, c, d
  int k;
  std::string variant;
  MassBreakdown mass;
};

inline void write_mass_table(const std::filesystem::path& path,
                             const std::vector<MassTableRow>& rows,
                             const Grid& grid, M4Reading reading) {
  std::ostringstream out;
  out << "# skydyn mass table (units: pi*F_pi/e)\n";
  out << "# grid: L=" << format_double(grid.length) << " N=" << grid.intervals << "\n";
  out << "# m4_reading: " << m4_reading_name(reading) << "\n";
  out << "# columns: case k variant m2 m4 total\n";
  for (const auto& r : rows)
    out << r.label << " " << r.k << " " << r.variant << " "
        << format_double(r.mass.m2) << " " << format_double(r.mass.m4) << " "
        << format_double(r.mass.total) << "\n";
  detail::write_text(path, out.str());
}

inline std::vector<MassTableRow> read_mass_table(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  std::vector<MassTableRow> rows;
  for (const auto& raw : t.raw_rows) {
    if (raw.size() != 6)
      throw Error(ErrorCategory::Parse, "mass table row needs 6 columns");
    MassTableRow r;
    r.label = raw[0];
    r.k = std::stoi(raw[1]);
    r.variant = raw[2];
    r.mass.k = r.k;
    r.mass.m2 = std::stod(raw[3]);
    r.mass.m4 = std::stod(raw[4]);
    r.mass.total = std::stod(raw[5]);
    rows.push_back(r);
  }
  return rows;
}

// ---- kink comparison ---------------------------------------------------------

inline void write_kink_comparison(const std::filesystem::path& path,
                                  const KinkComparison& kc, const Grid& grid) {
  std::ostringstream out;
  out << "# skydyn kink equation comparison\n";
  out << "# grid: L=" << format_double(grid.length) << " N=" << grid.intervals << "\n";
  out << "# l2_norm_vs_modified: " << format_double(kc.norm_vs_modified) << "\n";
  out << "# l2_norm_vs_pionmass: " << format_double(kc.norm_vs_pionmass) << "\n";
  out << "# columns: x lhs_kink rhs_pionmass rhs_modified\n";
  for (std::size_t i = 0; i < kc.x.size(); ++i)
    out << format_double(kc.x[i]) << " " << format_double(kc.lhs_kink[i]) << " "
        << format_double(kc.rhs_pionmass[i]) << " "
        << format_double(kc.rhs_modified[i]) << "\n";
  detail::write_text(path, out.str());
}

struct KinkComparisonFile {
  KinkComparison data;
  std::map<std::string, std::string> header;
};

inline KinkComparisonFile read_kink_comparison(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  KinkComparisonFile f;
  f.header = t.header;
  for (const auto& row : t.rows) {
    if (row.size() != 4)
      throw Error(ErrorCategory::Parse, "comparison row needs 4 columns");
    f.data.x.push_back(row[0]);
    f.data.lhs_kink.push_back(row[1]);
    f.data.rhs_pionmass.push_back(row[2]);
    f.data.rhs_modified.push_back(row[3]);
  }
  if (f.header.count("l2_norm_vs_modified"))
    f.data.norm_vs_modified = std::stod(f.header.at("l2_norm_vs_modified"));
  if (f.header.count("l2_norm_vs_pionmass"))
    f.data.norm_vs_pionmass = std::stod(f.header.at("l2_norm_vs_pionmass"));
  return f;
}

// ---- snapshots, energy log, mode histories -----------------------------------

inline std::string run_tag(DynamicsModel model, int mode, double amp, double dt) {
  std::ostringstream s;
  s << model_name(model) << "_j" << mode << "_A" << format_compact(amp) << "_dt"
    << format_compact(dt);
  return s.str();
}

inline void write_snapshot(const std::filesystem::path& path, const FieldState& st,
                           const Profile& base, double requested_t,
                           const std::string& tag) {
  std::ostringstream out;
  out << "# skydyn field snapshot\n";
  out << "# run: " << tag << "\n";
  out << "# t: " << format_double(st.t) << "\n";
  out << "# requested_t: " << format_double(requested_t) << "\n";
  out << "# grid: L=" << format_double(st.grid.length) << " N=" << st.grid.intervals
      << "\n";
  out << "# columns: x F dF Fdot\n";
  for (int i = 0; i < st.grid.nodes(); ++i)
    out << format_double(st.grid.x(i)) << " " << format_double(st.f[i]) << " "
        << format_double(st.f[i] - base.values[i]) << " "
        << format_double(st.fdot[i]) << "\n";
  detail::write_text(path, out.str());
}

struct SnapshotFile {
  std::vector<double> x, f, df, fdot;
  double t = 0.0;
  std::map<std::string, std::string> header;
};

inline SnapshotFile read_snapshot(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  SnapshotFile s;
  s.header = t.header;
  if (t.header.count("t")) s.t = std::stod(t.header.at("t"));
  for (const auto& row : t.rows) {
    if (row.size() != 4)
      throw Error(ErrorCategory::Parse, "snapshot row needs 4 columns");
    s.x.push_back(row[0]);
    s.f.push_back(row[1]);
    s.df.push_back(row[2]);
    s.fdot.push_back(row[3]);
  }
  return s;
}

inline void write_energy_log(const std::filesystem::path& path,
                             const std::vector<EnergySample>& log,
                             const std::string& tag) {
  std::ostringstream out;
  out << "# skydyn energy log (units: pi*F_pi/e)\n";
  out << "# run: " << tag << "\n";
  out << "# columns: t H\n";
  for (const auto& s : log)
    out << format_double(s.t) << " " << format_double(s.h) << "\n";
  detail::write_text(path, out.str());
}

inline std::vector<EnergySample> read_energy_log(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  std::vector<EnergySample> log;
  for (const auto& row : t.rows) {
    if (row.size() != 2) throw Error(ErrorCategory::Parse, "energy row needs 2 columns");
    log.push_back({row[0], row[1]});
  }
  return log;
}

inline void write_mode_history(const std::filesystem::path& path,
                               const ModeHistory& mh, const std::string& tag) {
  std::ostringstream out;
  out << "# skydyn mode history\n";
  out << "# run: " << tag << "\n";
  out << "# mode: " << mh.mode << "\n";
  out << "# columns: t A\n";
  for (std::size_t i = 0; i < mh.t.size(); ++i)
    out << format_double(mh.t[i]) << " " << format_double(mh.amplitude[i]) << "\n";
  detail::write_text(path, out.str());
}

inline ModeHistory read_mode_history(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  ModeHistory mh;
  if (t.header.count("mode")) mh.mode = std::stoi(t.header.at("mode"));
  for (const auto& row : t.rows) {
    if (row.size() != 2) throw Error(ErrorCategory::Parse, "mode row needs 2 columns");
    mh.t.push_back(row[0]);
    mh.amplitude.push_back(row[1]);
  }
  return mh;
}

inline void write_spectrum(const std::filesystem::path& path, const ModeSpectrum& sp,
                           const std::string& source) {
  std::ostringstream out;
  out << "# skydyn mode spectrum\n";
  out << "# source: " << source << "\n";
  out << "# t: " << format_double(sp.t) << "\n";
  out << "# columns: j A\n";
  for (std::size_t j = 0; j < sp.amplitudes.size(); ++j)
    out << (j + 1) << " " << format_double(sp.amplitudes[j]) << "\n";
  detail::write_text(path, out.str());
}

inline ModeSpectrum read_spectrum(const std::filesystem::path& path) {
  auto t = detail::read_table(path);
  ModeSpectrum sp;
  if (t.header.count("t")) sp.t = std::stod(t.header.at("t"));
  for (const auto& row : t.rows) {
    if (row.size() != 2) throw Error(ErrorCategory::Parse, "spectrum row needs 2 columns");
    sp.amplitudes.push_back(row[1]);
  }
  return sp;
}

}  // namespace skyrmion
