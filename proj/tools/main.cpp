// skydyn — hedgehog soliton laboratory for the modified Skyrme model.
//
// Commands:
//   static        solve a static profile equation, write (x, F)
//   mass-table    the four B=2 mass cases (kink a/b, solved c/d)
//   compare-kink  kink-profile residual vs the two SB sources
//   evolve        perturbed time evolution: snapshots, energy log, mode series
//   spectrum      sine-mode amplitudes of a snapshot's fluctuation
//
// Configuration: paper defaults, overridden by --config FILE (key=value lines)
// and then by --key value flags. All outputs land in --out DIR (default ./out).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "skydyn/run.hpp"

namespace {

void print_usage() {
  std::cout <<
      "usage: skydyn <command> [--config FILE] [--key value ...]\n"
      "\n"
      "commands: static | mass-table | compare-kink | evolve | spectrum\n"
      "\n"
      "keys (config file and flags share names):\n"
      "  L, N            box size and intervals        [16, 128]\n"
      "  dt, t_end       time step and final time      [1e-3; 500 quartic / 300 sixth]\n"
      "  j, A            excitation mode and amplitude [16, 0.1]\n"
      "  model           quartic | sixth               [quartic]\n"
      "  sixth_force     standard | conservative       [standard]\n"
      "  variant         none | pionmass | modified    [modified]\n"
      "  k, n            twist and winding (static)    [1, 1]\n"
      "  m4_reading      primary | alternate           [primary]\n"
      "  m_pi, e, F_pi   physical constants            [140, 4.84, 108]\n"
      "  epsilon         SB rescale                    [3.5e-7]\n"
      "  eps6_sq         sixth-order coupling (fm^2)   [5]\n"
      "  out             output directory              [out]\n"
      "  input           snapshot file (spectrum)\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace skyrmion;
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty() || args[0] == "--help" || args[0] == "-h") {
    print_usage();
    return args.empty() ? 2 : 0;
  }

  RunConfig cfg;
  try {
    const std::string cmd = args[0];
    if (cmd == "static") cfg.command = Command::Static;
    else if (cmd == "mass-table") cfg.command = Command::MassTable;
    else if (cmd == "compare-kink") cfg.command = Command::CompareKink;
    else if (cmd == "evolve") cfg.command = Command::Evolve;
    else if (cmd == "spectrum") cfg.command = Command::Spectrum;
    else throw Error(ErrorCategory::Parse, "unknown command '" + cmd + "'");

    // pull out --config first so flags override file values
    std::vector<std::string> flags;
    std::string config_file;
    for (std::size_t i = 1; i < args.size(); ++i) {
      if (args[i] == "--config") {
        if (i + 1 >= args.size())
          throw Error(ErrorCategory::Parse, "--config needs a file");
        config_file = args[++i];
      } else if (args[i].rfind("--config=", 0) == 0) {
        config_file = args[i].substr(9);
      } else {
        flags.push_back(args[i]);
      }
    }
    if (!config_file.empty()) {
      std::ifstream in(config_file);
      if (!in) throw Error(ErrorCategory::Io, "cannot open " + config_file);
      std::stringstream ss;
      ss << in.rdbuf();
      parse_config_text(cfg, ss.str());
    }
    parse_flags(cfg, flags);

    const auto files = run_command(cfg);
    std::cout << "wrote " << files.size() << " file(s) to " << cfg.out_dir << "\n";
    return 0;
  } catch (const Error& err) {
    std::cerr << "error: category=" << category_name(err.category()) << ": "
              << err.what() << "\n";
    return err.exit_code();
  } catch (const std::exception& ex) {
    std::cerr << "error: category=internal: " << ex.what() << "\n";
    return 1;
  }
}
