#pragma once

#include "cglike/types.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cglike {

/// An immutable unconstrained test problem: objective, analytic gradient and
/// its standard starting point. Safe to share between threads.
struct ProblemInstance {
  std::string name;
  Index dim = 0;
  Vector start;
  std::function<Scalar(const Vector&)> value;
  std::function<Vector(const Vector&)> gradient;
  /// Global minimizer when it is known in closed form.
  std::optional<Vector> minimizer;

  std::string key() const { return name + "/" + std::to_string(dim); }
};

struct EvalCounter {
  std::int64_t f_evals = 0;
  std::int64_t g_evals = 0;
};

/// Per-run view of a problem that charges every evaluation attempt to its
/// counter. Not thread-safe; give each run its own instance.
class CountedProblem {
 public:
  explicit CountedProblem(const ProblemInstance& problem) : problem_(&problem) {}

  const ProblemInstance& problem() const noexcept { return *problem_; }
  Index dim() const noexcept { return problem_->dim; }
  const EvalCounter& counter() const noexcept { return counter_; }

  Scalar evaluate(const Vector& x);
  Vector gradient(const Vector& x);

 private:
  void check_input(const Vector& x) const;

  const ProblemInstance* problem_;
  EvalCounter counter_;
};

inline Scalar evaluate(CountedProblem& p, const Vector& x) { return p.evaluate(x); }
inline Vector gradient(CountedProblem& p, const Vector& x) { return p.gradient(x); }

/// Central differences with a uniform step h. Does not touch any counter.
Vector fd_gradient(const ProblemInstance& p, const Vector& x, Scalar h);

/// Central differences with h_i = cbrt(eps) * (1 + |x_i|).
Vector fd_gradient(const ProblemInstance& p, const Vector& x);

/// f(x) = 1/2 x^T A x. A must be symmetric.
ProblemInstance make_quadratic(std::string name, Matrix A, Vector start);

/// Builds a catalog problem at an arbitrary admissible dimension.
ProblemInstance make_problem(const std::string& name, Index dim);

/// Every problem name make_problem() knows, sorted.
std::vector<std::string> problem_names();

/// The default desk-scale catalog, sorted by name then dimension.
const std::vector<ProblemInstance>& catalog();

/// One instance per problem family, used for the convergence comparison.
std::vector<ProblemInstance> desk_suite();

/// Looks up an exact (name, dim) pair inside catalog().
const ProblemInstance& find_in_catalog(const std::string& name, Index dim);

struct GradientCheck {
  std::string name;
  Index dim = 0;
  /// max over checked points of ||g - g_fd|| / (1 + ||g_fd||)
  Scalar max_rel_error = 0;
  bool passed = false;
};

/// Compares the analytic gradient with fd_gradient at the start point and at
/// `points` pseudo-random points drawn uniformly from [start-1, start+1].
GradientCheck check_gradient(const ProblemInstance& p, std::uint64_t seed, int points = 5,
                             Scalar tolerance = 1e-6);

}  // namespace cglike
