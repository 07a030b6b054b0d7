// Run configuration: paper-default values, key=value file parsing and
// command-line overrides. Unknown keys are rejected; every numeric value is
// validated against the module preconditions before any computation starts.
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skydyn/dynamics.hpp"
#include "skydyn/energy.hpp"
#include "skydyn/model.hpp"

namespace skyrmion {

enum class Command { Static, MassTable, CompareKink, Evolve, Spectrum };

inline const char* command_name(Command c) {
  switch (c) {
    case Command::Static: return "static";
    case Command::MassTable: return "mass-table";
    case Command::CompareKink: return "compare-kink";
    case Command::Evolve: return "evolve";
    case Command::Spectrum: return "spectrum";
  }
  return "?";
}

struct RunConfig {
  Command command = Command::Static;
  double length = 16.0;
  int intervals = 128;
  double dt = 1e-3;
  std::optional<double> t_end;  // model-dependent default when unset
  int mode = 16;                // initial excitation mode j
  double amplitude = 0.1;       // A
  DynamicsModel model = DynamicsModel::Quartic;
  SixthForce sixth_force = SixthForce::Standard;
  SbVariant variant = SbVariant::Modified;
  int k = 1;
  int winding = 1;
  M4Reading m4_reading = M4Reading::Primary;
  double m_pi = 140.0;
  double e = 4.84;
  double f_pi = 108.0;
  double epsilon = 3.5e-7;
  double eps6_sq = 5.0;
  std::string out_dir = "out";
  std::string input;  // spectrum: snapshot file to analyze

  Grid grid() const { return Grid(length, intervals); }
  ModelParams params() const {
    return derive_dimensionless(m_pi, e, f_pi, epsilon, eps6_sq);
  }
  double effective_t_end() const {
    if (t_end) return *t_end;
    return model == DynamicsModel::Quartic ? 500.0 : 300.0;
  }
  std::vector<double> snapshot_times() const {
    std::vector<double> base = model == DynamicsModel::Quartic
                                   ? std::vector<double>{0, 100, 200, 300, 500}
                                   : std::vector<double>{0, 100, 200, 300};
    std::vector<double> out;
    for (double t : base)
      if (t <= effective_t_end()) out.push_back(t);
    return out;
  }
  std::vector<int> history_modes() const {
    return model == DynamicsModel::Quartic ? std::vector<int>{8, 16, 32}
                                           : std::vector<int>{8, 16, 64, 127};
  }

  void validate() const {
    grid().validate();                       // throws on bad L, N
    (void)params();                          // throws on bad constants
    if (!(dt > 0.0)) throw Error(ErrorCategory::Validation, "dt must be > 0");
    if (t_end && *t_end < 0.0)
      throw Error(ErrorCategory::Validation, "t_end must be >= 0");
    if (mode < 1 || mode > intervals - 1)
      throw Error(ErrorCategory::Validation,
                  "j must lie in 1.." + std::to_string(intervals - 1));
    if (k < 1) throw Error(ErrorCategory::Validation, "k must be >= 1");
    if (winding < 0 || winding > 2)
      throw Error(ErrorCategory::Validation, "n must be 0, 1 or 2");
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline double parse_number(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorCategory::Parse, "value of '" + key + "' is not a number: '" + v + "'");
  }
}

inline int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw Error(ErrorCategory::Parse, "value of '" + key + "' is not an integer: '" + v + "'");
  }
}

inline void apply_key(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "L") c.length = parse_number(key, value);
  else if (key == "N") c.intervals = parse_int(key, value);
  else if (key == "dt") c.dt = parse_number(key, value);
  else if (key == "t_end") c.t_end = parse_number(key, value);
  else if (key == "j") c.mode = parse_int(key, value);
  else if (key == "A") c.amplitude = parse_number(key, value);
  else if (key == "k") c.k = parse_int(key, value);
  else if (key == "n") c.winding = parse_int(key, value);
  else if (key == "m_pi") c.m_pi = parse_number(key, value);
  else if (key == "e") c.e = parse_number(key, value);
  else if (key == "F_pi") c.f_pi = parse_number(key, value);
  else if (key == "epsilon") c.epsilon = parse_number(key, value);
  else if (key == "eps6_sq") c.eps6_sq = parse_number(key, value);
  else if (key == "out") c.out_dir = value;
  else if (key == "input") c.input = value;
  else if (key == "model") {
    if (value == "quartic") c.model = DynamicsModel::Quartic;
    else if (value == "sixth") c.model = DynamicsModel::Sixth;
    else throw Error(ErrorCategory::Parse, "model must be quartic or sixth");
  } else if (key == "variant") {
    if (value == "none") c.variant = SbVariant::None;
    else if (value == "pionmass") c.variant = SbVariant::PionMass;
    else if (value == "modified") c.variant = SbVariant::Modified;
    else throw Error(ErrorCategory::Parse,
                     "variant must be none, pionmass or modified");
  } else if (key == "m4_reading") {
    if (value == "primary") c.m4_reading = M4Reading::Primary;
    else if (value == "alternate") c.m4_reading = M4Reading::Alternate;
    else throw Error(ErrorCategory::Parse, "m4_reading must be primary or alternate");
  } else if (key == "sixth_force") {
    if (value == "standard") c.sixth_force = SixthForce::Standard;
    else if (value == "conservative") c.sixth_force = SixthForce::Conservative;
    else throw Error(ErrorCategory::Parse,
                     "sixth_force must be standard or conservative");
  } else {
    throw Error(ErrorCategory::Parse, "unknown key '" + key + "'");
  }
}

}  // namespace detail

// Parse a key=value document ('#' starts a comment, blank lines ignored).
// Later assignments override earlier ones; flags are applied on top by the
// caller. Malformed lines report their line number.
inline void parse_config_text(RunConfig& config, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCategory::Parse,
                  "line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw Error(ErrorCategory::Parse,
                  "line " + std::to_string(lineno) + ": empty key or value");
    try {
      detail::apply_key(config, key, value);
    } catch (const Error& err) {
      throw Error(err.category(),
                  "line " + std::to_string(lineno) + ": " + err.what());
    }
  }
}

// Flags: --key value or --key=value, applied after (over) the file values.
inline void parse_flags(RunConfig& config, const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string arg = args[i];
    if (arg.rfind("--", 0) != 0)
      throw Error(ErrorCategory::Parse, "unexpected argument '" + arg + "'");
    arg = arg.substr(2);
    std::string key, value;
    const std::size_t eq = arg.find('=');
    if (eq != std::string::npos) {
      key = arg.substr(0, eq);
      value = arg.substr(eq + 1);
    } else {
      key = arg;
      if (i + 1 >= args.size())
        throw Error(ErrorCategory::Parse, "flag --" + key + " needs a value");
      value = args[++i];
    }
    detail::apply_key(config, key, value);
  }
}

}  // namespace skyrmion
