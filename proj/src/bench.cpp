#include "cglike/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace cglike {

std::vector<SolverSpec> specs_for(const std::vector<SolverConfig>& configs) {
  std::vector<SolverSpec> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back({std::string(to_string(c.method)), c});
  return out;
}

const CostMatrix& SuiteResult::by_metric(Metric m) const {
  switch (m) {
    case Metric::f_evals: return f_evals;
    case Metric::iters: return iters;
    case Metric::time: return time;
  }
  return f_evals;
}

namespace {

RunResult guarded_run(const ProblemInstance& p, const SolverConfig& cfg) {
  try {
    return minimize(p, cfg);
  } catch (const Error&) {
    RunResult failed;
    failed.status = RunStatus::NumericalFailure;
    return failed;
  }
}

}  // namespace

SuiteResult run_suite(const std::vector<ProblemInstance>& problems,
                      const std::vector<SolverSpec>& solvers, const SuiteOptions& options) {
  const std::size_t np = problems.size();
  const std::size_t ns = solvers.size();
  const std::size_t jobs = np * ns;

  SuiteResult out;
  out.runs.resize(jobs);
  std::vector<double> times(jobs, 0.0);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      const ProblemInstance& p = problems[j / ns];
      const SolverSpec& s = solvers[j % ns];
      RunRecord& rec = out.runs[j];
      rec.problem = p.name;
      rec.dim = p.dim;
      rec.solver = s.label;
      rec.result = guarded_run(p, s.config);

      std::vector<double> samples{rec.result.wall_time};
      for (int r = 1; r < options.time_repeats; ++r) {
        samples.push_back(guarded_run(p, s.config).wall_time);
      }
      std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
      times[j] = samples[samples.size() / 2];
    }
  };

  const auto workers = static_cast<std::size_t>(std::max(1, options.parallelism));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < std::min(workers, jobs); ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (CostMatrix* m : {&out.f_evals, &out.iters, &out.time}) {
    m->costs.resize(static_cast<Index>(np), static_cast<Index>(ns));
    for (const auto& s : solvers) m->solvers.push_back(s.label);
    for (const auto& p : problems) m->problems.push_back({p.name, p.dim});
  }
  out.f_evals.metric = Metric::f_evals;
  out.iters.metric = Metric::iters;
  out.time.metric = Metric::time;

  for (std::size_t j = 0; j < jobs; ++j) {
    const auto row = static_cast<Index>(j / ns);
    const auto col = static_cast<Index>(j % ns);
    const RunResult& r = out.runs[j].result;
    const bool ok = r.status == RunStatus::Converged;
    out.f_evals.costs(row, col) = ok ? static_cast<Scalar>(r.f_evals) : kFailed;
    // A run that converges at x0 takes zero iterations; costs must be positive.
    out.iters.costs(row, col) = ok ? std::max<Scalar>(r.iters, 1) : kFailed;
    out.time.costs(row, col) = ok ? std::max(times[j], 1e-9) : kFailed;
  }
  return out;
}

std::vector<Scalar> default_t_grid() {
  std::vector<Scalar> t;
  for (int k = 0; k <= 40; ++k) t.push_back(std::exp2(k / 8.0));
  return t;
}

Matrix performance_ratios(const CostMatrix& m) {
  if (m.costs.size() == 0) throw Error(ErrorKind::EmptyMatrix, "no problems or solvers");
  if (!std::isfinite(m.costs.minCoeff())) {
    throw Error(ErrorKind::EmptyMatrix, "no solver succeeded on any problem");
  }
  Matrix r(m.costs.rows(), m.costs.cols());
  for (Index p = 0; p < m.costs.rows(); ++p) {
    const Scalar best = m.costs.row(p).minCoeff();
    for (Index s = 0; s < m.costs.cols(); ++s) {
      const Scalar c = m.costs(p, s);
      r(p, s) = std::isfinite(c) ? c / best : kFailed;
    }
  }
  return r;
}

namespace {

Scalar fraction_at(const Matrix& ratios, Index solver, Scalar t) {
  const auto solved = (ratios.col(solver).array() <= t).count();
  return static_cast<Scalar>(solved) / static_cast<Scalar>(ratios.rows());
}

}  // namespace

Scalar profile_value(const CostMatrix& m, std::size_t solver, Scalar t) {
  return fraction_at(performance_ratios(m), static_cast<Index>(solver), t);
}

std::vector<ProfileCurve> performance_profile(const CostMatrix& m, const std::vector<Scalar>& t_grid) {
  const Matrix ratios = performance_ratios(m);

  std::vector<Scalar> ts(t_grid.begin(), t_grid.end());
  for (Index i = 0; i < ratios.size(); ++i) {
    if (std::isfinite(ratios(i))) ts.push_back(ratios(i));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<ProfileCurve> curves;
  for (Index s = 0; s < ratios.cols(); ++s) {
    ProfileCurve c;
    c.solver = m.solvers[static_cast<std::size_t>(s)];
    c.t = ts;
    c.fraction.reserve(ts.size());
    for (Scalar t : ts) c.fraction.push_back(fraction_at(ratios, s, t));
    curves.push_back(std::move(c));
  }
  return curves;
}

std::vector<std::pair<std::string, Scalar>> win_fractions(const CostMatrix& m) {
  const Matrix ratios = performance_ratios(m);
  std::vector<std::pair<std::string, Scalar>> out;
  for (Index s = 0; s < ratios.cols(); ++s) {
    out.emplace_back(m.solvers[static_cast<std::size_t>(s)], fraction_at(ratios, s, 1.0));
  }
  return out;
}

}  // namespace cglike
