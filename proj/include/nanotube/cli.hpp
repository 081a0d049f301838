#ifndef NANOTUBE_CLI_HPP
#define NANOTUBE_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nanotube/potential.hpp"
#include "nanotube/quasimomentum.hpp"

namespace nanotube {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown by parse_args on --help; carries the help text
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::string potential = "zero";
  bool has_p = false;
  bool has_q = false;
  TubeVector p{};
  ReducedVector q{};
  double lambda_min = 0.0;  // resolved default: min(0, min q0) - 1
  double lambda_max = 10.0;
  int grid = 50;
  int samples = 6;
  int points = 200;
  int rings = 2;
  double tol = 0.0;  // 0 = pick per potential
  double eta_target = 0.0;
  double lambda = 0.0;
  bool lambda_given = false;
  bool oracle = false;
  std::string format;    // csv | json, empty = subcommand default
  std::string out_path;  // empty = stdout
  int threads = 0;       // from NANOTUBE_SPECTRA_THREADS, 0 = auto
};

// "zero" | "cosine:A" | "well:DEPTH:WIDTH" | "file:PATH"
PotentialSpec make_potential(const std::string& text);

RunConfig parse_args(const std::vector<std::string>& args);  // throws UsageError

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

}  // namespace nanotube

#endif
