#include "cglike/problems.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

using namespace cglike;

namespace {

ProblemInstance sum_of_squares(Index n) {
  return make_quadratic("SUMSQ", 2.0 * Matrix::Identity(n, n), Vector::Ones(n));
}

// Straight-from-formula loop encodings, independent of the catalog code.
double woods_sif(const Vector& x) {
  // Group form: GA = (x2 - x1^2)/0.01 ... GF = (x2 - x4)^2 / 10
  double f = 0;
  for (Index b = 0; b + 3 < x.size(); b += 4) {
    const double x1 = x[b], x2 = x[b + 1], x3 = x[b + 2], x4 = x[b + 3];
    f += std::pow(x2 - x1 * x1, 2) / 0.01 + std::pow(x1 - 1, 2) +
         std::pow(x4 - x3 * x3, 2) * 90.0 + std::pow(x3 - 1, 2) +
         std::pow(x2 + x4 - 2, 2) / 0.1 + std::pow(x2 - x4, 2) / 10.0;
  }
  return f;
}

double srosenbr_loop(const Vector& x) {
  double f = 0;
  for (Index i = 0; i + 1 < x.size(); i += 2) {
    f += 100.0 * std::pow(x[i + 1] - x[i] * x[i], 2) + std::pow(1.0 - x[i], 2);
  }
  return f;
}

double tridia_loop(const Vector& x) {
  double f = std::pow(x[0] - 1.0, 2);
  for (Index i = 1; i < x.size(); ++i) f += double(i + 1) * std::pow(2.0 * x[i] - x[i - 1], 2);
  return f;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("evaluate: closed-form values") {
  const auto& ros = find_in_catalog("SROSENBR", 50);
  CountedProblem p(ros);
  CHECK(evaluate(p, Vector::Ones(50)) == 0.0);

  const auto sq = sum_of_squares(2);
  CountedProblem q(sq);
  CHECK(evaluate(q, Vector{{1.0, 2.0}}) == doctest::Approx(5.0).epsilon(1e-15));
  const Vector g = gradient(q, Vector{{1.0, 2.0}});
  CHECK(g[0] == 2.0);
  CHECK(g[1] == 4.0);
}

TEST_CASE("WOODS at its start point matches an independent transcription") {
  for (Index n : {4, 100, 1000}) {
    const auto p = make_problem("WOODS", n);
    const double lib = p.value(p.start);
    CHECK(rel_diff(lib, woods_sif(p.start)) <= 1e-12);
  }
  // 19192 per block of four, computed offline from the published formula.
  CHECK(make_problem("WOODS", 4).value(make_problem("WOODS", 4).start) == doctest::Approx(19192.0));
  const auto w100 = make_problem("WOODS", 100);
  CHECK(rel_diff(w100.value(w100.start), 479800.0) <= 1e-12);
}

TEST_CASE("second transcriptions agree at random points") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 5; ++trial) {
    Vector x(100);
    for (auto& v : x) v = u(rng);
    CHECK(rel_diff(make_problem("SROSENBR", 100).value(x), srosenbr_loop(x)) <= 1e-12);
    CHECK(rel_diff(make_problem("TRIDIA", 100).value(x), tridia_loop(x)) <= 1e-12);
    CHECK(rel_diff(make_problem("WOODS", 100).value(x), woods_sif(x)) <= 1e-12);
  }
}

TEST_CASE("gradient vanishes at known minimizers") {
  for (const auto& p : catalog()) {
    if (!p.minimizer) continue;
    CAPTURE(p.key());
    const Vector g = p.gradient(*p.minimizer);
    CHECK(g.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("analytic gradients agree with central differences") {
  for (const auto& p : catalog()) {
    CAPTURE(p.key());
    const GradientCheck c = check_gradient(p, 42);
    CHECK(c.max_rel_error <= 1e-6);
    CHECK(c.passed);
  }
}

TEST_CASE("fd_gradient examples") {
  const auto sq = sum_of_squares(2);
  const Vector g = fd_gradient(sq, Vector{{1.0, 2.0}}, 1e-5);
  CHECK(std::abs(g[0] - 2.0) <= 1e-9);
  CHECK(std::abs(g[1] - 4.0) <= 1e-9);

  ProblemInstance quartic;
  quartic.name = "X4";
  quartic.dim = 1;
  quartic.start = Vector::Zero(1);
  quartic.value = [](const Vector& x) { return std::pow(x[0], 4); };
  quartic.gradient = [](const Vector& x) { return Vector::Constant(1, 4 * std::pow(x[0], 3)); };
  CHECK(rel_diff(fd_gradient(quartic, Vector::Constant(1, 2.0), 1e-4)[0], 32.0) <= 1e-6);

  CHECK_THROWS_AS(fd_gradient(sq, Vector{{1.0, 2.0}}, 0.0), Error);
}

TEST_CASE("fd_gradient does not touch counters") {
  const auto& p = find_in_catalog("TRIDIA", 50);
  CountedProblem c(p);
  (void)fd_gradient(p, p.start);
  CHECK(c.counter().f_evals == 0);
  CHECK(c.counter().g_evals == 0);
}

TEST_CASE("catalog contents") {
  const auto& cat = catalog();
  CHECK(cat.size() >= 20);
  for (std::size_t i = 1; i < cat.size(); ++i) {
    const bool ordered = cat[i - 1].name < cat[i].name ||
                         (cat[i - 1].name == cat[i].name && cat[i - 1].dim < cat[i].dim);
    CHECK(ordered);
  }
  std::set<std::string> names;
  for (const auto& p : cat) {
    names.insert(p.name);
    CHECK(p.dim <= 1000);
    CHECK(p.start.size() == p.dim);
    CHECK(p.gradient(p.start).size() == p.dim);
  }
  for (const char* required :
       {"SROSENBR", "WOODS", "POWELLSG", "TRIDIA", "DQDRTIC", "DIXON3DQ", "ARWHEAD", "LIARWHD",
        "NONDIA", "ENGVAL1", "FREUROTH", "EXTROSNB", "COSINE", "EDENSCH", "QUARTC", "DQRTIC",
        "PENALTY1", "VARDIM", "BDQRTIC", "TOINTGSS", "POWER"}) {
    CHECK_MESSAGE(names.count(required) == 1, required);
  }
  CHECK(desk_suite().size() == 20);
}

TEST_CASE("catalog lookups") {
  const auto& tridia = find_in_catalog("TRIDIA", 50);
  CHECK(tridia.dim == 50);
  CHECK(tridia.start == Vector::Ones(50));

  const auto& ros = find_in_catalog("SROSENBR", 100);
  CHECK(ros.dim == 100);
  CHECK(ros.start[0] == -1.2);
  CHECK(ros.start[1] == 1.0);

  auto not_in_catalog = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind() == ErrorKind::NotInCatalog;
    }
    return false;
  };
  CHECK(not_in_catalog([] { (void)find_in_catalog("NOSUCH", 50); }));
  CHECK(not_in_catalog([] { (void)make_problem("NOSUCH", 50); }));
  CHECK_THROWS_AS(make_problem("WOODS", 6), Error);

  // Formulas are dimension-parametric beyond the desk-scale catalog.
  CHECK(make_problem("TRIDIA", 5000).start.size() == 5000);
}

TEST_CASE("counter discipline") {
  const auto& p = find_in_catalog("ENGVAL1", 50);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    CountedProblem c(p);
    const int k = static_cast<int>(rng() % 10);
    const int m = static_cast<int>(rng() % 10);
    for (int i = 0; i < k; ++i) (void)evaluate(c, p.start);
    for (int i = 0; i < m; ++i) (void)gradient(c, p.start);
    CHECK(c.counter().f_evals == k);
    CHECK(c.counter().g_evals == m);
  }
}

TEST_CASE("evaluations are deterministic") {
  for (const auto& p : catalog()) {
    const Vector x = p.start.array() + 0.25;
    CHECK(p.value(x) == p.value(x));
    CHECK(p.gradient(x) == p.gradient(x));
  }
}

TEST_CASE("evaluate error paths") {
  const auto& p = find_in_catalog("TRIDIA", 50);
  CountedProblem c(p);
  try {
    (void)evaluate(c, Vector::Ones(3));
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  Vector bad = Vector::Ones(50);
  bad[3] = std::nan("");
  try {
    (void)gradient(c, bad);
    FAIL("expected NonFiniteInput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteInput);
  }

  const auto& ros = find_in_catalog("SROSENBR", 50);
  CountedProblem r(ros);
  try {
    (void)evaluate(r, Vector::Constant(50, 1e160));
    FAIL("expected NonFiniteOutput");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteOutput);
  }
}
