#pragma once

#include "cglike/directions.hpp"
#include "cglike/linesearch.hpp"
#include "cglike/problems.hpp"
#include "cglike/types.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

namespace cglike {

struct SolverConfig {
  MethodId method = MethodId::NEW;
  Scalar tau = 0.002;
  Scalar rho = 0.5;
  Scalar c1 = 1e-4;
  /// Stop once ||g_k|| <= eps_scale * ||g_0||.
  Scalar eps_scale = 1e-6;
  int max_iters = 4000;
  Scalar step_floor = kDefaultStepFloor;
  Scalar bb_guard = 1e-8;
  Scalar hz_eta = 0.01;
  bool record_trace = false;

  /// tau = 0 is accepted: it turns the NEW direction into steepest descent.
  void validate() const;

  LineSearchConfig line_search() const { return {c1, rho, step_floor, bb_guard}; }
  DirectionParams direction_params() const { return {tau, hz_eta}; }
};

struct IterationRecord {
  int k = 0;
  Scalar f = 0;
  Scalar gnorm = 0;
  Scalar dnorm = 0;
  Scalar dg = 0;
  Scalar beta = 0;
  Scalar alpha = 0;
  Scalar alpha_bar = 0;
  int backtracks = 0;
  bool restarted = false;
};

enum class RunStatus { Converged, IterationLimit, StepFloor, NumericalFailure };

constexpr std::string_view to_string(RunStatus s) noexcept {
  switch (s) {
    case RunStatus::Converged: return "Converged";
    case RunStatus::IterationLimit: return "IterationLimit";
    case RunStatus::StepFloor: return "StepFloor";
    case RunStatus::NumericalFailure: return "NumericalFailure";
  }
  return "?";
}

struct RunResult {
  RunStatus status = RunStatus::NumericalFailure;
  int iters = 0;
  std::int64_t f_evals = 0;
  std::int64_t g_evals = 0;
  Scalar final_f = 0;
  Scalar final_gnorm = 0;
  double wall_time = 0;  ///< seconds
  std::vector<IterationRecord> trace;
};

/// Nonlinear CG with Armijo backtracking and the spectral initial step.
RunResult minimize(const ProblemInstance& p, const SolverConfig& cfg);

/// Same, charging evaluations to a caller-owned wrapper.
RunResult minimize(CountedProblem& p, const SolverConfig& cfg);

struct TheoryReport {
  /// min_k -d_k'g_k / ||g_k||^2
  Scalar min_descent_ratio = 0;
  /// max_k ||d_k|| / ||g_k||
  Scalar max_dirnorm_ratio = 0;
  /// sum_{j<=k} ||g_j||^4 / ||d_j||^2
  std::vector<Scalar> zoutendijk_partial_sums;
  /// Step-floor bound alpha_k >= C_k ||g_k||^2 / ||d_k||^2 with
  /// C_k = min(alpha_bar_k (1-tau)^2, rho (1-c1)(1-tau) / L). Only evaluated
  /// when L is known.
  bool step_floor_ok = false;
  std::optional<Scalar> lipschitz_L;
  /// max_k (bound_k - alpha_k) / bound_k; positive values are violations.
  Scalar step_floor_max_shortfall = -std::numeric_limits<Scalar>::infinity();
};

/// Lower bound on the accepted step at record `r`.
Scalar step_floor_bound(const IterationRecord& r, const SolverConfig& cfg, Scalar L);

TheoryReport theory_report(const std::vector<IterationRecord>& trace, const SolverConfig& cfg,
                           std::optional<Scalar> L, Scalar rel_slack = 1e-10);

/// Largest eigenvalue of a symmetric positive semidefinite matrix by power
/// iteration, stopping once ||A v - lambda v|| <= tol * lambda.
template <typename Derived>
typename Derived::Scalar lipschitz_of_quadratic(const Eigen::MatrixBase<Derived>& A,
                                                typename Derived::Scalar tol = 1e-10,
                                                int max_iters = 10000) {
  using S = typename Derived::Scalar;
  using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;
  const Index n = A.rows();
  if (n == 0 || A.cols() != n) throw Error(ErrorKind::DimensionMismatch, "lipschitz_of_quadratic");
  if (A.norm() == S(0)) return S(0);

  // Fixed non-uniform start; a constant vector can be orthogonal to the
  // dominant eigenvector (e.g. second-difference matrices).
  Vec v(n);
  for (Index i = 0; i < n; ++i) v[i] = S(0.1) + std::sin(S(1.7) * S(i + 1));
  v.normalize();

  for (int it = 0; it < max_iters; ++it) {
    const Vec w = A * v;
    const S lambda = v.dot(w);
    if ((w - lambda * v).norm() <= tol * std::abs(lambda)) return lambda;
    const S wn = w.norm();
    if (!(wn > 0)) throw Error(ErrorKind::NonConvergence, "power iteration collapsed");
    v = w / wn;
  }
  throw Error(ErrorKind::NonConvergence,
              "power iteration did not converge in " + std::to_string(max_iters) + " steps");
}

}  // namespace cglike
