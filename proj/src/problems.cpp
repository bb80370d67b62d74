#include "cglike/problems.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <random>

namespace cglike {

void CountedProblem::check_input(const Vector& x) const {
  if (x.size() != problem_->dim) {
    throw Error(ErrorKind::DimensionMismatch, problem_->name + ": expected n = " +
                                                  std::to_string(problem_->dim) + ", got " +
                                                  std::to_string(x.size()));
  }
  if (!x.allFinite()) throw Error(ErrorKind::NonFiniteInput, problem_->name);
}

// Every attempt is charged, including ones rejected for non-finite input, so
// that line-search accounting stays exact.
Scalar CountedProblem::evaluate(const Vector& x) {
  ++counter_.f_evals;
  check_input(x);
  const Scalar f = problem_->value(x);
  if (!std::isfinite(f)) throw Error(ErrorKind::NonFiniteOutput, problem_->name + ": f(x)");
  return f;
}

Vector CountedProblem::gradient(const Vector& x) {
  ++counter_.g_evals;
  check_input(x);
  Vector g = problem_->gradient(x);
  if (!g.allFinite()) throw Error(ErrorKind::NonFiniteOutput, problem_->name + ": g(x)");
  return g;
}

namespace {

Vector central_differences(const ProblemInstance& p, const Vector& x, const Vector& steps) {
  if (x.size() != p.dim) throw Error(ErrorKind::DimensionMismatch, p.name);
  Vector g(p.dim);
  Vector probe = x;
  for (Index i = 0; i < p.dim; ++i) {
    const Scalar h = steps[i];
    probe[i] = x[i] + h;
    const Scalar fp = p.value(probe);
    probe[i] = x[i] - h;
    const Scalar fm = p.value(probe);
    probe[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  if (!g.allFinite()) throw Error(ErrorKind::NonFiniteOutput, p.name + ": finite differences");
  return g;
}

// FNV-1a; keeps per-problem random streams independent of std::hash.
std::uint64_t mix(std::uint64_t seed, const std::string& name, Index dim) {
  std::uint64_t h = 1469598103934665603ull ^ seed;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ull;
  }
  h ^= static_cast<std::uint64_t>(dim);
  h *= 1099511628211ull;
  return h;
}

}  // namespace

Vector fd_gradient(const ProblemInstance& p, const Vector& x, Scalar h) {
  if (!(h > 0)) throw Error(ErrorKind::InvalidConfig, "finite-difference step must be positive");
  return central_differences(p, x, Vector::Constant(x.size(), h));
}

Vector fd_gradient(const ProblemInstance& p, const Vector& x) {
  const Scalar base = std::cbrt(std::numeric_limits<Scalar>::epsilon());
  return central_differences(p, x, (base * (1.0 + x.array().abs())).matrix());
}

ProblemInstance make_quadratic(std::string name, Matrix A, Vector start) {
  if (A.rows() != A.cols() || A.rows() != start.size()) {
    throw Error(ErrorKind::DimensionMismatch, name + ": quadratic shape");
  }
  ProblemInstance p;
  p.name = std::move(name);
  p.dim = start.size();
  p.start = std::move(start);
  p.minimizer = Vector::Zero(p.dim);
  auto shared = std::make_shared<const Matrix>(std::move(A));
  p.value = [shared](const Vector& x) { return 0.5 * x.dot(*shared * x); };
  p.gradient = [shared](const Vector& x) -> Vector { return *shared * x; };
  return p;
}

GradientCheck check_gradient(const ProblemInstance& p, std::uint64_t seed, int points,
                             Scalar tolerance) {
  std::mt19937_64 rng(mix(seed, p.name, p.dim));
  // Uniform [-1, 1) from the top 53 bits; avoids implementation-defined
  // distribution objects so reports are byte-stable across toolchains.
  auto unit = [&rng] { return static_cast<Scalar>(rng() >> 11) * 0x1.0p-52 - 1.0; };

  GradientCheck out{p.name, p.dim, 0.0, true};
  for (int k = 0; k <= points; ++k) {
    Vector x = p.start;
    if (k > 0) {
      for (Index i = 0; i < x.size(); ++i) x[i] += unit();
    }
    Scalar err = std::numeric_limits<Scalar>::quiet_NaN();
    try {
      const Vector g = p.gradient(x);
      const Vector fd = fd_gradient(p, x);
      err = (g - fd).norm() / (1.0 + fd.norm());
    } catch (const Error&) {
    }
    if (std::isnan(err) || err > out.max_rel_error) out.max_rel_error = err;
  }
  out.passed = out.max_rel_error <= tolerance;
  return out;
}

}  // namespace cglike
