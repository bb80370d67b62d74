#include "cglike/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace cglike {

std::string format_number(Scalar v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

nlohmann::json to_json(const IterationRecord& r) {
  return {{"k", r.k},         {"f", r.f},         {"gnorm", r.gnorm},
          {"dnorm", r.dnorm}, {"dg", r.dg},       {"beta", r.beta},
          {"alpha", r.alpha}, {"alpha_bar", r.alpha_bar}, {"backtracks", r.backtracks},
          {"restarted", r.restarted}};
}

nlohmann::json to_json(const RunResult& r, bool include_trace) {
  nlohmann::json j = {{"status", std::string(to_string(r.status))},
                      {"iters", r.iters},
                      {"f_evals", r.f_evals},
                      {"g_evals", r.g_evals},
                      {"final_f", r.final_f},
                      {"final_gnorm", r.final_gnorm},
                      {"wall_time", r.wall_time}};
  if (include_trace) {
    nlohmann::json trace = nlohmann::json::array();
    for (const auto& rec : r.trace) trace.push_back(to_json(rec));
    j["trace"] = std::move(trace);
  }
  return j;
}

nlohmann::json to_json(const TheoryReport& r) {
  nlohmann::json j = {{"min_descent_ratio", r.min_descent_ratio},
                      {"max_dirnorm_ratio", r.max_dirnorm_ratio},
                      {"zoutendijk_partial_sums", r.zoutendijk_partial_sums},
                      {"step_floor_ok", r.step_floor_ok}};
  j["lipschitz_L"] = r.lipschitz_L ? nlohmann::json(*r.lipschitz_L) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const SolverConfig& c) {
  return {{"method", std::string(to_string(c.method))},
          {"tau", c.tau},
          {"rho", c.rho},
          {"c1", c.c1},
          {"eps_scale", c.eps_scale},
          {"max_iters", c.max_iters},
          {"step_floor", c.step_floor},
          {"bb_guard", c.bb_guard},
          {"hz_eta", c.hz_eta}};
}

nlohmann::json to_json(const RunRecord& r) {
  return {{"problem", r.problem},
          {"dim", r.dim},
          {"solver", r.solver},
          {"result", to_json(r.result, !r.result.trace.empty())}};
}

void write_cost_csv(std::ostream& os, const CostMatrix& m) {
  os << "problem,dim";
  for (const auto& s : m.solvers) os << ',' << s;
  os << '\n';
  for (Index p = 0; p < m.costs.rows(); ++p) {
    const auto& key = m.problems[static_cast<std::size_t>(p)];
    os << key.name << ',' << key.dim;
    for (Index s = 0; s < m.costs.cols(); ++s) os << ',' << format_number(m.costs(p, s));
    os << '\n';
  }
}

void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves) {
  os << "solver,t,fraction\n";
  for (const auto& c : curves) {
    for (std::size_t i = 0; i < c.t.size(); ++i) {
      os << c.solver << ',' << format_number(c.t[i]) << ',' << format_number(c.fraction[i]) << '\n';
    }
  }
}

nlohmann::json wins_json(const std::vector<std::pair<std::string, Scalar>>& wins) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [label, frac] : wins) j[label] = frac;
  return j;
}

}  // namespace cglike
