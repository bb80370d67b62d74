#include "cli.hpp"

#include "cglike/bench.hpp"
#include "cglike/io.hpp"

#include <CLI11.hpp>
#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

namespace cglike::cli {
namespace fs = std::filesystem;

std::vector<Scalar> default_tau_grid() {
  return {0.0,  0.001, 0.002, 0.003, 0.004, 0.005, 0.01, 0.02, 0.03, 0.04,
          0.05, 0.1,   0.2,   0.3,   0.4,   0.5,   0.6,  0.7,  0.8,  0.9};
}

namespace {

bool has_glob(const std::string& s) { return s.find_first_of("*?[") != std::string::npos; }

bool matches(const CliConfig& cfg, const ProblemInstance& p) {
  if (fnmatch(cfg.problem.c_str(), p.name.c_str(), 0) != 0) return false;
  if (cfg.dim && p.dim != *cfg.dim) return false;
  return p.dim >= cfg.min_dim && p.dim <= cfg.max_dim;
}

std::vector<MethodId> methods_of(const CliConfig& cfg) {
  if (cfg.methods.empty()) return {std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<MethodId> out;
  for (const auto& m : cfg.methods) out.push_back(parse_method(m));
  return out;
}

/// Opens `dir/name` for writing, creating `dir` on first use.
std::ofstream open_output(const fs::path& dir, const std::string& name) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::ofstream f(dir / name, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot write " + (dir / name).string());
  return f;
}

void write_metric(const fs::path& dir, const std::string& tag, const CostMatrix& m,
                  std::vector<std::pair<std::string, Scalar>>& wins) {
  {
    auto f = open_output(dir, "cost_" + tag + ".csv");
    write_cost_csv(f, m);
  }
  auto f = open_output(dir, "profile_" + tag + ".csv");
  try {
    write_profile_csv(f, performance_profile(m));
    wins = win_fractions(m);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyMatrix) throw;
    write_profile_csv(f, {});
    wins.clear();
    for (const auto& s : m.solvers) wins.emplace_back(s, 0.0);
  }
}

}  // namespace

std::vector<ProblemInstance> select_problems(const CliConfig& cfg) {
  std::vector<ProblemInstance> out;
  if (cfg.desk) {
    for (auto& p : desk_suite()) {
      if (matches(cfg, p)) out.push_back(std::move(p));
    }
    return out;
  }
  // An exact name with an explicit dimension may sit outside the catalog.
  if (!has_glob(cfg.problem) && cfg.dim) {
    out.push_back(make_problem(cfg.problem, *cfg.dim));
    return out;
  }
  if (!has_glob(cfg.problem)) {
    const auto names = problem_names();
    if (std::find(names.begin(), names.end(), cfg.problem) == names.end()) {
      throw Error(ErrorKind::NotInCatalog, "unknown problem '" + cfg.problem + "'");
    }
  }
  for (const auto& p : catalog()) {
    if (matches(cfg, p)) out.push_back(p);
  }
  return out;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ProblemInstance> problems;
  SolverConfig sc = cfg.solver;
  try {
    problems = select_problems(cfg);
    if (cfg.methods.size() > 1) throw Error(ErrorKind::InvalidConfig, "solve takes one --method");
    if (!cfg.methods.empty()) sc.method = parse_method(cfg.methods.front());
    sc.record_trace = cfg.trace || cfg.theory;
    sc.validate();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (problems.size() != 1) {
    err << "error: filter matches " << problems.size() << " problems; solve needs exactly one\n";
    return 1;
  }

  const ProblemInstance& p = problems.front();
  const RunResult r = minimize(p, sc);
  nlohmann::json j = to_json(r, cfg.trace);
  j["problem"] = p.name;
  j["dim"] = p.dim;
  j["method"] = std::string(to_string(sc.method));
  if (cfg.theory) {
    std::optional<Scalar> L;
    j["theory"] = to_json(theory_report(r.trace, sc, L));
  }
  out << j.dump(2) << '\n';
  return r.status == RunStatus::Converged ? 0 : 2;
}

int cmd_suite(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ProblemInstance> problems;
  std::vector<SolverConfig> configs;
  try {
    problems = select_problems(cfg);
    for (MethodId m : methods_of(cfg)) {
      SolverConfig sc = cfg.solver;
      sc.method = m;
      sc.record_trace = false;
      sc.validate();
      configs.push_back(sc);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (problems.empty()) {
    err << "error: no problems match the filter\n";
    return 1;
  }

  const fs::path dir(cfg.out_dir);
  try {
    open_output(dir, "runs.json");  // fail before doing any work
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const SuiteResult res = run_suite(problems, specs_for(configs), {cfg.parallelism, cfg.time_repeats});

  try {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : res.runs) runs.push_back(to_json(r));
    open_output(dir, "runs.json") << runs.dump(2) << '\n';

    std::vector<std::pair<std::string, Scalar>> wins_fevals, wins_iters, wins_time;
    write_metric(dir, "fevals", res.f_evals, wins_fevals);
    write_metric(dir, "iters", res.iters, wins_iters);
    write_metric(dir, "time", res.time, wins_time);
    open_output(dir, "wins.json") << wins_json(wins_fevals).dump(2) << '\n';
    open_output(dir, "wins_iters.json") << wins_json(wins_iters).dump(2) << '\n';
    open_output(dir, "wins_time.json") << wins_json(wins_time).dump(2) << '\n';

    out << "problems: " << problems.size() << ", solvers: " << configs.size() << '\n';
    for (std::size_t s = 0; s < configs.size(); ++s) {
      const auto solved = (res.f_evals.costs.col(static_cast<Index>(s)).array() < kFailed).count();
      out << res.f_evals.solvers[s] << "\tsolved " << solved << "/" << problems.size()
          << "\twins(f_evals) " << format_number(wins_fevals[s].second) << '\n';
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_sweep_tau(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<ProblemInstance> problems;
  std::vector<SolverSpec> specs;
  const std::vector<Scalar> taus = cfg.taus.empty() ? default_tau_grid() : cfg.taus;
  try {
    for (MethodId m : methods_of(cfg)) {
      if (!cfg.methods.empty() && m != MethodId::NEW) {
        throw Error(ErrorKind::InvalidConfig, "sweep-tau only applies to NEW");
      }
    }
    problems = select_problems(cfg);
    for (Scalar tau : taus) {
      SolverConfig sc = cfg.solver;
      sc.method = MethodId::NEW;
      sc.tau = tau;
      sc.record_trace = false;
      sc.validate();
      specs.push_back({"tau=" + format_number(tau), sc});
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (problems.empty()) {
    err << "error: no problems match the filter\n";
    return 1;
  }

  const fs::path dir(cfg.out_dir);
  try {
    open_output(dir, "sweep.csv");
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  const SuiteResult res = run_suite(problems, specs, {cfg.parallelism, 1});
  std::vector<Scalar> wins(specs.size(), 0.0);
  try {
    const auto w = win_fractions(res.f_evals);
    for (std::size_t s = 0; s < w.size(); ++s) wins[s] = w[s].second;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyMatrix) throw;
  }

  std::ostringstream csv;
  csv << "tau,solved,total_fevals,wins_vs_self\n";
  for (std::size_t s = 0; s < specs.size(); ++s) {
    const auto col = res.f_evals.costs.col(static_cast<Index>(s));
    long solved = 0;
    Scalar total = 0;
    for (Index p = 0; p < col.size(); ++p) {
      if (col[p] < kFailed) {
        ++solved;
        total += col[p];
      }
    }
    csv << format_number(taus[s]) << ',' << solved << ',' << format_number(total) << ','
        << format_number(wins[s]) << '\n';
  }
  try {
    open_output(dir, "sweep.csv") << csv.str();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << csv.str();
  return 0;
}

int cmd_check_gradients(const CliConfig& cfg, const std::vector<ProblemInstance>& problems,
                        std::ostream& out, std::ostream& err) {
  std::vector<std::string> failing;
  for (const auto& p : problems) {
    const GradientCheck c = check_gradient(p, cfg.seed);
    out << c.name << '\t' << c.dim << '\t' << format_number(c.max_rel_error) << '\t'
        << (c.passed ? "PASS" : "FAIL") << '\n';
    if (!c.passed) failing.push_back(p.key());
  }
  if (failing.empty()) return 0;
  err << "gradient check failed:";
  for (const auto& k : failing) err << ' ' << k;
  err << '\n';
  return 2;
}

int cmd_list_problems(const CliConfig& cfg, std::ostream& out) {
  for (const auto& p : select_problems(cfg)) out << p.name << '\t' << p.dim << '\n';
  return 0;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  SolverConfig& sc = cfg.solver;
  bool print_config = false;
  std::optional<long long> dim;

  CLI::App app{"Nonlinear conjugate-gradient solvers with Armijo backtracking"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.add_flag("--print-config", print_config, "Print the effective solver settings as JSON");

  app.add_option("--problem", cfg.problem, "Problem name or glob")->capture_default_str();
  app.add_option("--dim", dim, "Exact problem dimension");
  app.add_option("--min-dim", cfg.min_dim, "Smallest dimension to include");
  app.add_option("--max-dim", cfg.max_dim, "Largest dimension to include");
  app.add_flag("--desk", cfg.desk, "Use the one-instance-per-family desk suite");
  app.add_option("--method", cfg.methods, "NEW, FR, MFR or HZ (comma separated)")
      ->delimiter(',')
      ->check(CLI::IsMember({"NEW", "FR", "MFR", "HZ"}));
  app.add_option("--tau", sc.tau, "NEW method parameter")->capture_default_str();
  app.add_option("--rho", sc.rho, "Backtracking factor")->capture_default_str();
  app.add_option("--c1", sc.c1, "Armijo constant")->capture_default_str();
  app.add_option("--eps-scale", sc.eps_scale, "Relative gradient tolerance")->capture_default_str();
  app.add_option("--max-iters", sc.max_iters, "Iteration limit")->capture_default_str();
  app.add_option("--step-floor", sc.step_floor, "Smallest admissible trial step");
  app.add_option("--bb-guard", sc.bb_guard, "Curvature guard for the spectral step");
  app.add_option("--hz-eta", sc.hz_eta, "Hager-Zhang truncation parameter")->capture_default_str();
  app.add_option("--out", cfg.out_dir, "Output directory")
      ->envname("CGLIKE_OUTPUT_DIR")
      ->capture_default_str();
  app.add_option("-j,--jobs", cfg.parallelism, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--time-repeats", cfg.time_repeats, "Runs per wall-time cell")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for gradient-check points")->capture_default_str();
  app.add_flag("--trace", cfg.trace, "Include the iteration trace (solve)");
  app.add_flag("--theory", cfg.theory, "Include descent/Zoutendijk diagnostics (solve)");
  app.add_option("--taus", cfg.taus, "Tau values for sweep-tau (comma separated)")->delimiter(',');

  auto* solve = app.add_subcommand("solve", "Solve one problem, print the result as JSON");
  auto* suite = app.add_subcommand("suite", "Run a solver x problem benchmark");
  auto* sweep = app.add_subcommand("sweep-tau", "Benchmark NEW over a grid of tau values");
  auto* check = app.add_subcommand("check-gradients", "Compare analytic and FD gradients");
  auto* list = app.add_subcommand("list-problems", "List catalog instances");
  for (auto* sub : {solve, suite, sweep, check, list}) sub->fallthrough();
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  if (dim) cfg.dim = static_cast<Index>(*dim);

  if (print_config) {
    try {
      if (cfg.methods.size() == 1) sc.method = parse_method(cfg.methods.front());
      sc.validate();
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      return 1;
    }
    out << to_json(sc).dump(2) << '\n';
    return 0;
  }

  try {
    if (solve->parsed()) return cmd_solve(cfg, out, err);
    if (suite->parsed()) return cmd_suite(cfg, out, err);
    if (sweep->parsed()) return cmd_sweep_tau(cfg, out, err);
    if (check->parsed()) return cmd_check_gradients(cfg, select_problems(cfg), out, err);
    if (list->parsed()) return cmd_list_problems(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  out << app.help();
  return 1;
}

}  // namespace cglike::cli
