#pragma once

#include "cglike/bench.hpp"
#include "cglike/solver.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cglike {

/// Shortest round-trip decimal form; "inf" for kFailed.
std::string format_number(Scalar v);

nlohmann::json to_json(const IterationRecord& r);
nlohmann::json to_json(const RunResult& r, bool include_trace);
nlohmann::json to_json(const TheoryReport& r);
nlohmann::json to_json(const SolverConfig& c);
nlohmann::json to_json(const RunRecord& r);

/// `problem,dim,<SOLVER>...`, one row per problem.
void write_cost_csv(std::ostream& os, const CostMatrix& m);

/// `solver,t,fraction`, one row per sample.
void write_profile_csv(std::ostream& os, const std::vector<ProfileCurve>& curves);

nlohmann::json wins_json(const std::vector<std::pair<std::string, Scalar>>& wins);

}  // namespace cglike
