#pragma once

#include "cglike/problems.hpp"
#include "cglike/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cglike::cli {

struct CliConfig {
  std::string command;
  std::string problem = "*";  ///< glob over problem names
  std::optional<Index> dim;
  Index min_dim = 1;
  Index max_dim = 1000000;
  bool desk = false;  ///< restrict to the one-per-family desk suite
  std::vector<std::string> methods;
  SolverConfig solver;
  std::string out_dir = "results";
  int parallelism = 1;
  int time_repeats = 3;
  std::uint64_t seed = 20240917;
  bool trace = false;
  bool theory = false;
  std::vector<Scalar> taus;
};

/// Tau values scanned by sweep-tau when none are given.
std::vector<Scalar> default_tau_grid();

std::vector<ProblemInstance> select_problems(const CliConfig& cfg);

int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_suite(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep_tau(const CliConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check_gradients(const CliConfig& cfg, const std::vector<ProblemInstance>& problems,
                        std::ostream& out, std::ostream& err);
int cmd_list_problems(const CliConfig& cfg, std::ostream& out);

/// Parses argv and dispatches. Exit codes: 0 success, 1 usage or I/O error,
/// 2 solver/check failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cglike::cli
