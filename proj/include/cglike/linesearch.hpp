#pragma once

#include "cglike/problems.hpp"
#include "cglike/types.hpp"

#include <cmath>
#include <limits>

namespace cglike {

/// eps / 10 for binary64, the smallest steplength tried before giving up.
inline constexpr Scalar kDefaultStepFloor = std::numeric_limits<Scalar>::epsilon() / 10.0;

struct LineSearchConfig {
  Scalar c1 = 1e-4;   ///< sufficient-decrease fraction
  Scalar rho = 0.5;   ///< backtracking factor
  Scalar step_floor = kDefaultStepFloor;
  Scalar bb_guard = 1e-8;  ///< curvature threshold below which the initial step falls back to 1

  void validate() const;
};

struct LineSearchOutcome {
  Scalar alpha = 0;
  int backtracks = 0;
  Scalar f_new = 0;
  Vector x_new;
};

/// Initial trial step with no history.
inline Scalar initial_step() noexcept { return 1.0; }

/// Spectral initial step s's / s'y, or 1 when s'y <= guard.
Scalar initial_step(const Vector& s_prev, const Vector& y_prev, Scalar guard);

/// Armijo backtracking: the largest alpha_bar * rho^i, i = 0, 1, ..., with
///   f(x + alpha d) <= f_x + c1 alpha d'g.
/// Exactly backtracks + 1 evaluations are charged to `p` on success. A trial
/// point whose value is not finite counts as a rejection. Throws
/// StepFloorReached when the trial step drops below cfg.step_floor.
LineSearchOutcome armijo_backtrack(CountedProblem& p, const Vector& x, Scalar f_x, const Vector& g,
                                   const Vector& d, Scalar alpha_bar, const LineSearchConfig& cfg);

}  // namespace cglike
