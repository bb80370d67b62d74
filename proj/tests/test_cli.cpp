#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace cglike;
namespace fs = std::filesystem;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "cglike");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("cglike_test_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("list-problems") {
  const auto r = run_cli({"list-problems", "--problem", "TRIDIA"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("TRIDIA\t", 0) == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("TRIDIA\t", 0) == 0);
    ++count;
  }
  CHECK(count >= 1);

  const auto desk = run_cli({"list-problems", "--desk"});
  CHECK(std::count(desk.out.begin(), desk.out.end(), '\n') == 20);
}

TEST_CASE("solve prints a JSON result") {
  const auto r = run_cli({"solve", "--problem", "TRIDIA", "--dim", "50", "--method", "NEW"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "Converged");
  CHECK(j["problem"] == "TRIDIA");
  CHECK(j["dim"] == 50);
  CHECK(j["method"] == "NEW");
  CHECK(j["iters"].get<int>() > 0);
  CHECK_FALSE(j.contains("trace"));
}

TEST_CASE("solve with trace and theory") {
  const auto r = run_cli({"solve", "--problem", "SROSENBR", "--dim", "50", "--trace", "--theory"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["trace"].size() == j["iters"].get<std::size_t>());
  CHECK(j["theory"]["min_descent_ratio"].get<double>() >= 1 - 0.002 - 1e-12);
}

TEST_CASE("solve exit codes") {
  CHECK(run_cli({"solve", "--problem", "NOSUCH", "--dim", "50"}).code == 1);
  CHECK(run_cli({"solve", "--problem", "TRIDIA", "--dim", "50", "--tau", "1.5"}).code == 1);
  CHECK(run_cli({"solve", "--problem", "*"}).code == 1);
  const auto limited = run_cli({"solve", "--problem", "TRIDIA", "--dim", "50", "--max-iters", "1"});
  CHECK(limited.code == 2);
  CHECK(nlohmann::json::parse(limited.out)["status"] == "IterationLimit");
}

TEST_CASE("print-config defaults") {
  const auto r = run_cli({"--print-config"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["method"] == "NEW");
  CHECK(j["tau"] == 0.002);
  CHECK(j["rho"] == 0.5);
  CHECK(j["c1"] == 1e-4);
  CHECK(j["eps_scale"] == 1e-6);
  CHECK(j["max_iters"] == 4000);
}

TEST_CASE("unknown flags are rejected") {
  const auto r = run_cli({"solve", "--frobnicate"});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  CHECK(run_cli({"solve", "--method", "PRP"}).code == 1);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const fs::path dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "cfg.toml");
    f << "tau = 0.25\nmax-iters = 77\n";
  }
  const std::string path = (dir / "cfg.toml").string();
  auto j = nlohmann::json::parse(run_cli({"--config", path, "--print-config"}).out);
  CHECK(j["tau"] == 0.25);
  CHECK(j["max_iters"] == 77);
  j = nlohmann::json::parse(run_cli({"--config", path, "--tau", "0.5", "--print-config"}).out);
  CHECK(j["tau"] == 0.5);
  CHECK(j["max_iters"] == 77);
}

TEST_CASE("suite writes cost, profile and win files") {
  const fs::path dir = scratch("suite");
  const auto r = run_cli({"suite", "--desk", "--problem", "T*", "--out", dir.string(), "--time-repeats", "1"});
  REQUIRE(r.code == 0);
  for (const char* f : {"runs.json", "cost_fevals.csv", "cost_iters.csv", "cost_time.csv",
                        "profile_fevals.csv", "profile_iters.csv", "profile_time.csv", "wins.json"}) {
    CHECK_MESSAGE(fs::exists(dir / f), f);
  }
  const std::string cost = slurp(dir / "cost_fevals.csv");
  CHECK(cost.rfind("problem,dim,NEW,FR,MFR,HZ\n", 0) == 0);
  for (const char* tag : {"fevals", "iters", "time"}) {
    const std::string prof = slurp(dir / (std::string("profile_") + tag + ".csv"));
    for (const char* s : {"\nNEW,", "\nFR,", "\nMFR,", "\nHZ,"}) CHECK(prof.find(s) != std::string::npos);
  }
  const auto wins = nlohmann::json::parse(slurp(dir / "wins.json"));
  CHECK(wins.size() == 4);
}

TEST_CASE("suite with one method wins everything it solves") {
  const fs::path dir = scratch("single");
  const auto r = run_cli({"suite", "--problem", "TRIDIA", "--method", "NEW", "--out", dir.string(),
                          "--time-repeats", "1"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(slurp(dir / "wins.json")) == nlohmann::json{{"NEW", 1.0}});
}

TEST_CASE("suite reruns are byte-identical") {
  const fs::path a = scratch("rerun_a");
  const fs::path b = scratch("rerun_b");
  REQUIRE(run_cli({"suite", "--desk", "--out", a.string(), "-j", "1", "--time-repeats", "1"}).code == 0);
  REQUIRE(run_cli({"suite", "--desk", "--out", b.string(), "-j", "4", "--time-repeats", "1"}).code == 0);
  for (const char* f : {"cost_fevals.csv", "cost_iters.csv", "profile_fevals.csv", "wins.json"}) {
    CHECK_MESSAGE(slurp(a / f) == slurp(b / f), f);
  }
}

TEST_CASE("unwritable output directory") {
  const fs::path dir = scratch("blocked");
  fs::create_directories(dir.parent_path());
  { std::ofstream(dir) << "a file, not a directory"; }
  const auto r = run_cli({"suite", "--problem", "TRIDIA", "--out", (dir / "sub").string()});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  fs::remove(dir);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch("env");
  ::setenv("CGLIKE_OUTPUT_DIR", dir.string().c_str(), 1);
  const auto r = run_cli({"suite", "--problem", "TRIDIA", "--method", "FR", "--time-repeats", "1"});
  ::unsetenv("CGLIKE_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir / "wins.json"));
}

TEST_CASE("sweep-tau") {
  const fs::path dir = scratch("sweep");
  const auto r = run_cli({"sweep-tau", "--desk", "--taus", "0.002,0.9", "--out", dir.string()});
  REQUIRE(r.code == 0);
  std::istringstream lines(slurp(dir / "sweep.csv"));
  std::string header, small, large;
  std::getline(lines, header);
  std::getline(lines, small);
  std::getline(lines, large);
  CHECK(header == "tau,solved,total_fevals,wins_vs_self");
  CHECK(small.rfind("0.002,", 0) == 0);
  CHECK(large.rfind("0.9,", 0) == 0);
  const int solved_small = std::stoi(small.substr(small.find(',') + 1));
  const int solved_large = std::stoi(large.substr(large.find(',') + 1));
  MESSAGE("solved at tau=0.002: " << solved_small << ", at tau=0.9: " << solved_large);
  CHECK(r.out == slurp(dir / "sweep.csv"));
}

TEST_CASE("check-gradients on the catalog") {
  const auto a = run_cli({"check-gradients", "--seed", "7"});
  CHECK(a.code == 0);
  CHECK(a.out.find("FAIL") == std::string::npos);
  const auto b = run_cli({"check-gradients", "--seed", "7"});
  CHECK(a.out == b.out);
}

TEST_CASE("check-gradients reports a corrupted gradient") {
  ProblemInstance bad = find_in_catalog("TRIDIA", 50);
  bad.name = "BROKEN";
  const auto inner = bad.gradient;
  bad.gradient = [inner](const Vector& x) {
    Vector g = inner(x);
    g[3] += 1.0;
    return g;
  };
  cli::CliConfig cfg;
  std::ostringstream out, err;
  const int code = cli::cmd_check_gradients(cfg, {find_in_catalog("TRIDIA", 50), bad}, out, err);
  CHECK(code == 2);
  CHECK(out.str().find("BROKEN\t50\t") != std::string::npos);
  CHECK(err.str().find("BROKEN") != std::string::npos);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(CGLIKE_CLI_PATH) + " solve --problem TRIDIA --dim 50 > /dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(status == 0);
  const std::string bad = std::string(CGLIKE_CLI_PATH) + " --bogus 2> /dev/null";
  const int bad_status = std::system(bad.c_str());
  CHECK(WEXITSTATUS(bad_status) == 1);
}
