#include "cglike/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

namespace cglike {

void SolverConfig::validate() const {
  if (!(tau >= 0 && tau < 1)) throw Error(ErrorKind::InvalidConfig, "tau must lie in [0,1)");
  if (!(eps_scale > 0)) throw Error(ErrorKind::InvalidConfig, "eps_scale must be positive");
  if (max_iters < 1) throw Error(ErrorKind::InvalidConfig, "max_iters must be positive");
  if (!(hz_eta > 0)) throw Error(ErrorKind::InvalidConfig, "hz_eta must be positive");
  line_search().validate();
}

RunResult minimize(const ProblemInstance& p, const SolverConfig& cfg) {
  CountedProblem counted(p);
  return minimize(counted, cfg);
}

RunResult minimize(CountedProblem& p, const SolverConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const LineSearchConfig ls = cfg.line_search();
  const DirectionParams dp = cfg.direction_params();

  RunResult result;
  auto finish = [&](RunStatus status, int iters, Scalar f, Scalar gnorm) {
    result.status = status;
    result.iters = iters;
    result.final_f = f;
    result.final_gnorm = gnorm;
    result.f_evals = p.counter().f_evals;
    result.g_evals = p.counter().g_evals;
    result.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
  };

  const Vector& x0 = p.problem().start;
  if (!x0.allFinite()) throw Error(ErrorKind::NonFiniteInput, p.problem().name + ": start");

  Vector x = x0;
  Scalar f;
  DirectionState state;
  try {
    f = p.evaluate(x);
    state.g_curr = p.gradient(x);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NonFiniteOutput) throw;
    return finish(RunStatus::NumericalFailure, 0, std::numeric_limits<Scalar>::quiet_NaN(),
                  std::numeric_limits<Scalar>::quiet_NaN());
  }
  Scalar gnorm = state.g_curr.norm();
  const Scalar eps = cfg.eps_scale * gnorm;

  std::optional<Vector> s_prev;
  for (int k = 0;; ++k) {
    if (gnorm <= eps) return finish(RunStatus::Converged, k, f, gnorm);
    if (k >= cfg.max_iters) return finish(RunStatus::IterationLimit, k, f, gnorm);

    Direction dir;
    try {
      dir = direction(cfg.method, state, dp);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DegenerateCurvature) throw;
      dir.d = -state.g_curr;
      dir.beta = 0;
      dir.restarted = true;
    }

    const Scalar alpha_bar =
        s_prev ? initial_step(*s_prev, *state.y_prev, cfg.bb_guard) : initial_step();

    LineSearchOutcome step;
    try {
      step = armijo_backtrack(p, x, f, state.g_curr, dir.d, alpha_bar, ls);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StepFloorReached) return finish(RunStatus::StepFloor, k, f, gnorm);
      if (e.kind() == ErrorKind::NotDescent) return finish(RunStatus::NumericalFailure, k, f, gnorm);
      throw;
    }

    if (cfg.record_trace) {
      IterationRecord rec;
      rec.k = k;
      rec.f = f;
      rec.gnorm = gnorm;
      rec.dnorm = dir.d.norm();
      rec.dg = dir.d.dot(state.g_curr);
      rec.beta = dir.beta;
      rec.alpha = step.alpha;
      rec.alpha_bar = alpha_bar;
      rec.backtracks = step.backtracks;
      rec.restarted = dir.restarted;
      result.trace.push_back(rec);
    }

    Vector g_new;
    try {
      g_new = p.gradient(step.x_new);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonFiniteOutput) throw;
      return finish(RunStatus::NumericalFailure, k + 1, step.f_new,
                    std::numeric_limits<Scalar>::quiet_NaN());
    }

    s_prev = step.x_new - x;
    state.y_prev = g_new - state.g_curr;
    state.g_prev = std::move(state.g_curr);
    state.d_prev = std::move(dir.d);
    state.g_curr = std::move(g_new);
    x = std::move(step.x_new);
    f = step.f_new;
    gnorm = state.g_curr.norm();
  }
}

Scalar step_floor_bound(const IterationRecord& r, const SolverConfig& cfg, Scalar L) {
  const Scalar one_minus_tau = 1.0 - cfg.tau;
  const Scalar C = std::min(r.alpha_bar * one_minus_tau * one_minus_tau,
                            cfg.rho * (1.0 - cfg.c1) * one_minus_tau / L);
  return C * (r.gnorm * r.gnorm) / (r.dnorm * r.dnorm);
}

TheoryReport theory_report(const std::vector<IterationRecord>& trace, const SolverConfig& cfg,
                           std::optional<Scalar> L, Scalar rel_slack) {
  TheoryReport rep;
  rep.lipschitz_L = L;
  rep.min_descent_ratio = std::numeric_limits<Scalar>::infinity();
  rep.max_dirnorm_ratio = 0;
  rep.zoutendijk_partial_sums.reserve(trace.size());
  Scalar sum = 0;
  for (const auto& r : trace) {
    const Scalar g2 = r.gnorm * r.gnorm;
    rep.min_descent_ratio = std::min(rep.min_descent_ratio, -r.dg / g2);
    rep.max_dirnorm_ratio = std::max(rep.max_dirnorm_ratio, r.dnorm / r.gnorm);
    sum += g2 * g2 / (r.dnorm * r.dnorm);
    rep.zoutendijk_partial_sums.push_back(sum);
  }
  if (L) {
    rep.step_floor_ok = true;
    for (const auto& r : trace) {
      const Scalar bound = step_floor_bound(r, cfg, *L);
      const Scalar shortfall = (bound - r.alpha) / bound;
      rep.step_floor_max_shortfall = std::max(rep.step_floor_max_shortfall, shortfall);
      if (r.alpha < bound * (1.0 - rel_slack)) rep.step_floor_ok = false;
    }
  }
  return rep;
}

}  // namespace cglike
