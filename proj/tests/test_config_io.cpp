// Configuration parsing, file round trips and output determinism.
#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "skydyn/run.hpp"

using namespace skyrmion;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name)
      : path(fs::temp_directory_path() / ("skydyn_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("defaults and overrides", "[config]") {
  RunConfig c;
  parse_config_text(c, "");
  CHECK(c.length == 16.0);
  CHECK(c.intervals == 128);
  CHECK(c.mode == 16);
  CHECK(c.amplitude == 0.1);
  CHECK(c.epsilon == 3.5e-7);
  CHECK(c.eps6_sq == 5.0);
  CHECK(c.m_pi == 140.0);
  CHECK(c.e == 4.84);
  CHECK(c.f_pi == 108.0);
  CHECK(c.effective_t_end() == 500.0);
  c.model = DynamicsModel::Sixth;
  CHECK(c.effective_t_end() == 300.0);
  CHECK(c.history_modes() == std::vector<int>{8, 16, 64, 127});

  // file value, then flag wins
  RunConfig d;
  parse_config_text(d, "N = 64\n");
  CHECK(d.intervals == 64);
  parse_flags(d, {"--N", "128"});
  CHECK(d.intervals == 128);
  parse_flags(d, {"--A=0.25"});
  CHECK(d.amplitude == 0.25);
}

TEST_CASE("config validation and parse errors", "[config]") {
  RunConfig c;
  parse_config_text(c, "j = 200\n");
  CHECK_THROWS_MATCHES(c.validate(), Error,
                       Catch::Matchers::MessageMatches(
                           Catch::Matchers::ContainsSubstring("1..127")));

  RunConfig d;
  try {
    parse_config_text(d, "L = 16\nthis line is broken\n");
    FAIL("expected parse error");
  } catch (const Error& err) {
    CHECK(err.category() == ErrorCategory::Parse);
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }

  CHECK_THROWS_AS(parse_config_text(d, "unknown_key = 3\n"), Error);
  CHECK_THROWS_AS(parse_config_text(d, "N = twelve\n"), Error);
  CHECK_THROWS_AS(parse_flags(d, {"--dt"}), Error);
  CHECK_THROWS_AS(parse_flags(d, {"stray"}), Error);

  // comments and blank lines are fine
  parse_config_text(d, "\n# comment\n  dt = 0.002  # trailing\n");
  CHECK(d.dt == 0.002);

  RunConfig neg;
  parse_config_text(neg, "m_pi = -1\n");
  CHECK_THROWS_AS(neg.validate(), Error);
}

TEST_CASE("profile and comparison files round-trip", "[io]") {
  TempDir tmp("roundtrip");
  RunConfig cfg;
  cfg.out_dir = (tmp.path / "a").string();

  cfg.command = Command::CompareKink;
  run_compare_kink(cfg);
  auto kc = read_kink_comparison(tmp.path / "a" / "kink_comparison.dat");
  CHECK(kc.data.x.size() == 128);
  CHECK(kc.data.norm_vs_pionmass ==
        Catch::Approx(3.904408358793).epsilon(1e-9));

  cfg.command = Command::Static;
  run_static(cfg);
  auto pf = read_profile(tmp.path / "a" / "profile_modified_k1_n1.dat");
  CHECK(pf.x.size() == 129);
  CHECK(pf.f.front() == Catch::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(std::stod(pf.header.at("residual_norm")) < 1e-6);
}

TEST_CASE("evolution artifacts round-trip", "[io]") {
  TempDir tmp("evolve");
  RunConfig cfg;
  cfg.command = Command::Evolve;
  cfg.out_dir = (tmp.path / "run").string();
  cfg.t_end = 2.0;
  auto files = run_evolution_suite(cfg);
  // t_end=2 keeps only the t=0 snapshot of the default list
  const fs::path dir = tmp.path / "run";
  auto snap = read_snapshot(dir / "snapshot_quartic_j16_A0.1_dt0.001_t0.dat");
  CHECK(snap.t == 0.0);
  CHECK(snap.x.size() == 129);
  CHECK(snap.df[8] == Catch::Approx(0.1 * std::sin(16 * std::numbers::pi *
                                                   snap.x[8] / 16.0))
                          .margin(1e-12));
  auto elog = read_energy_log(dir / "energy_quartic_j16_A0.1_dt0.001.dat");
  CHECK(elog.size() >= 20);
  auto mh = read_mode_history(dir / "mode_quartic_j16_A0.1_dt0.001_m16.dat");
  CHECK(mh.mode == 16);
  CHECK(mh.amplitude.front() == Catch::Approx(0.1).epsilon(1e-12));

  // spectrum of the t=0 snapshot picks out the single excited mode
  RunConfig sp;
  sp.command = Command::Spectrum;
  sp.input = (dir / "snapshot_quartic_j16_A0.1_dt0.001_t0.dat").string();
  sp.out_dir = (tmp.path / "spec").string();
  run_spectrum(sp);
  auto spec = read_spectrum(tmp.path / "spec" /
                            "spectrum_snapshot_quartic_j16_A0.1_dt0.001_t0.dat");
  REQUIRE(spec.amplitudes.size() == 127);
  CHECK(spec.amplitudes[15] == Catch::Approx(0.1).epsilon(1e-10));

  // manifest lists every artifact
  const std::string man = slurp(dir / "manifest.txt");
  for (const auto& f : files) CHECK(man.find(f) != std::string::npos);
  CHECK(man.find("status: ok") != std::string::npos);
}

TEST_CASE("byte-identical outputs for identical configs", "[io]") {
  TempDir tmp("determinism");
  for (Command cmd : {Command::Static, Command::CompareKink}) {
    RunConfig a, b;
    a.command = b.command = cmd;
    a.out_dir = (tmp.path / (std::string("a") + command_name(cmd))).string();
    b.out_dir = (tmp.path / (std::string("b") + command_name(cmd))).string();
    auto fa = run_command(a);
    auto fb = run_command(b);
    REQUIRE(fa == fb);
    for (const auto& f : fa)
      CHECK(slurp(fs::path(a.out_dir) / f) == slurp(fs::path(b.out_dir) / f));
  }
}

TEST_CASE("spectrum command needs an input file", "[io]") {
  RunConfig cfg;
  cfg.command = Command::Spectrum;
  cfg.out_dir = (fs::temp_directory_path() / "skydyn_noinput").string();
  CHECK_THROWS_AS(run_spectrum(cfg), Error);
}
