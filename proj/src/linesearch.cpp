#include "cglike/linesearch.hpp"

namespace cglike {

void LineSearchConfig::validate() const {
  if (!(c1 > 0 && c1 < 1)) throw Error(ErrorKind::InvalidConfig, "c1 must lie in (0,1)");
  if (!(rho > 0 && rho < 1)) throw Error(ErrorKind::InvalidConfig, "rho must lie in (0,1)");
  if (!(step_floor > 0)) throw Error(ErrorKind::InvalidConfig, "step_floor must be positive");
  if (!(bb_guard > 0)) throw Error(ErrorKind::InvalidConfig, "bb_guard must be positive");
}

Scalar initial_step(const Vector& s_prev, const Vector& y_prev, Scalar guard) {
  if (s_prev.size() != y_prev.size()) {
    throw Error(ErrorKind::DimensionMismatch, "initial_step: |s| != |y|");
  }
  const Scalar sy = s_prev.dot(y_prev);
  if (!(sy > guard)) return 1.0;
  const Scalar step = s_prev.squaredNorm() / sy;
  return std::isfinite(step) && step > 0 ? step : 1.0;
}

LineSearchOutcome armijo_backtrack(CountedProblem& p, const Vector& x, Scalar f_x, const Vector& g,
                                   const Vector& d, Scalar alpha_bar, const LineSearchConfig& cfg) {
  if (x.size() != g.size() || x.size() != d.size()) {
    throw Error(ErrorKind::DimensionMismatch, "armijo_backtrack");
  }
  if (!(alpha_bar > 0) || !std::isfinite(alpha_bar)) {
    throw Error(ErrorKind::InvalidConfig, "initial step must be positive and finite");
  }
  const Scalar dg = d.dot(g);
  if (!(dg < 0)) throw Error(ErrorKind::NotDescent, "d'g = " + std::to_string(dg));

  LineSearchOutcome out;
  Scalar alpha = alpha_bar;
  for (int i = 0;; ++i) {
    if (alpha < cfg.step_floor) {
      throw Error(ErrorKind::StepFloorReached, "alpha = " + std::to_string(alpha));
    }
    Vector trial = x + alpha * d;
    Scalar f_trial;
    try {
      f_trial = p.evaluate(trial);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NonFiniteInput && e.kind() != ErrorKind::NonFiniteOutput) throw;
      alpha *= cfg.rho;
      continue;
    }
    if (f_trial <= f_x + cfg.c1 * alpha * dg) {
      out.alpha = alpha;
      out.backtracks = i;
      out.f_new = f_trial;
      out.x_new = std::move(trial);
      return out;
    }
    alpha *= cfg.rho;
  }
}

}  // namespace cglike
