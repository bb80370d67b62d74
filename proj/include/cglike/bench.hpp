#pragma once

#include "cglike/problems.hpp"
#include "cglike/solver.hpp"
#include "cglike/types.hpp"

#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cglike {

enum class Metric { f_evals, iters, time };

constexpr std::string_view to_string(Metric m) noexcept {
  switch (m) {
    case Metric::f_evals: return "f_evals";
    case Metric::iters: return "iters";
    case Metric::time: return "time";
  }
  return "?";
}

inline constexpr Scalar kFailed = std::numeric_limits<Scalar>::infinity();

struct ProblemKey {
  std::string name;
  Index dim = 0;
};

/// Problems along rows, solvers along columns. Failed runs hold kFailed.
struct CostMatrix {
  Metric metric = Metric::f_evals;
  std::vector<std::string> solvers;
  std::vector<ProblemKey> problems;
  Matrix costs;
};

/// Dolan-More step function rho_s(t) sampled at `t`.
struct ProfileCurve {
  std::string solver;
  std::vector<Scalar> t;
  std::vector<Scalar> fraction;
};

struct SolverSpec {
  std::string label;
  SolverConfig config;
};

std::vector<SolverSpec> specs_for(const std::vector<SolverConfig>& configs);

struct SuiteOptions {
  int parallelism = 1;
  /// Wall-time cells are the median over this many runs.
  int time_repeats = 3;
};

struct RunRecord {
  std::string problem;
  Index dim = 0;
  std::string solver;
  RunResult result;
};

struct SuiteResult {
  CostMatrix f_evals;
  CostMatrix iters;
  CostMatrix time;
  /// Row-major over (problem, solver), matching the cost matrices.
  std::vector<RunRecord> runs;

  const CostMatrix& by_metric(Metric m) const;
};

/// Runs every (problem, solver) pair once on a pool of `parallelism` workers.
/// Counter-based cells do not depend on the pool size.
SuiteResult run_suite(const std::vector<ProblemInstance>& problems,
                      const std::vector<SolverSpec>& solvers, const SuiteOptions& options = {});

/// 2^(k/8), k = 0..40: a logarithmic grid over [1, 32].
std::vector<Scalar> default_t_grid();

/// Per-problem performance ratios cost / min_s cost; kFailed stays infinite.
Matrix performance_ratios(const CostMatrix& m);

/// Curves evaluated on t_grid merged with every finite ratio.
std::vector<ProfileCurve> performance_profile(const CostMatrix& m,
                                              const std::vector<Scalar>& t_grid = default_t_grid());

/// rho_s(1) per solver; tying solvers all count as winners.
std::vector<std::pair<std::string, Scalar>> win_fractions(const CostMatrix& m);

/// rho_s(t) for one solver at a single t.
Scalar profile_value(const CostMatrix& m, std::size_t solver, Scalar t);

}  // namespace cglike
