// Runs the eight acceptance criteria and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include "geocrystal/suites.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace geocrystal;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, const std::function<Outcome()>& body, double limit_s = 0) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.passed = false;
    o.detail += " (over the " + std::to_string(static_cast<int>(limit_s)) + " s limit)";
  }
  if (!o.passed) ++failures;
  std::printf("%s %d %s [%.2f s] %s\n", o.passed ? "PASS" : "FAIL", number, title.c_str(), secs, o.detail.c_str());
  std::fflush(stdout);
}

long fact_value(const Fact& f, const std::string& key) {
  for (const auto& [k, v] : f.values)
    if (k == key) return v;
  return -1;
}

const Fact* find_fact(const std::vector<Fact>& facts, const std::string& name) {
  for (const Fact& f : facts)
    if (f.name == name) return &f;
  return nullptr;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args, const std::string& env = "") {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("geocrystal_accept_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  static int counter = 0;
  const fs::path out = dir / ("out" + std::to_string(counter++) + ".txt");
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + GEOCRYSTAL_CLI + "\" " + args + " >\"" +
                          out.string() + "\" 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

std::string data(const std::string& name) { return std::string("\"") + GEOCRYSTAL_DATA + "/" + name + "\""; }

}  // namespace

int main() {
  criterion(1, "sl3 separation of I_3 and J_(1,1)", [] {
    const Sl3Report r = verify_sl3_example();
    const Fact* partition = find_fact(r.facts, "partition_of");
    const Fact* weight = find_fact(r.facts, "not_a_weight");
    const Fact* id = find_fact(r.facts, "dim_Id");
    const Fact* jw = find_fact(r.facts, "dim_Jw");
    if (!partition || !weight || !id || !jw) return Outcome{false, "missing fact"};
    const bool values = fact_value(*id, "tensor") == 165 && fact_value(*id, "weyl") == 165 &&
                        fact_value(*jw, "crystal") == 65 && fact_value(*jw, "tensor") == 65;
    return Outcome{r.passed() && values, "dim U/I_3 = " + std::to_string(fact_value(*id, "tensor")) +
                                             ", dim U/J_(1,1) = " + std::to_string(fact_value(*jw, "crystal"))};
  }, 10);

  // Criteria 2 and 7 share one pass over the grid.
  Json signs;
  bool signs_ran = false;
  const auto signs_tally = [&](const char* checked, const char* failed) {
    if (!signs_ran) {
      signs = run_signs_suite(6, 4).report;
      signs_ran = true;
    }
    long c = 0, f = 0;
    for (const Json& row : signs["by_n"]) {
      c += row[checked].get<long>();
      f += row[failed].get<long>();
    }
    return Outcome{c > 0 && f == 0, std::to_string(c) + " checked, " + std::to_string(f) + " failed"};
  };
  criterion(2, "sign agreement s_k = r_k (n <= 6, entries <= 4)",
            [&] { return signs_tally("sign_checked", "sign_failed"); });

  Json maffei;
  criterion(3, "quiver-to-flag identities on 500 sampled points", [&] {
    MaffeiSuiteConfig config;
    config.seed = 2024;
    config.samples = 500;
    const SuiteResult r = run_maffei_suite(config);
    maffei = r.report;
    bool all_ranks = true;
    for (int n = 2; n <= 5; ++n) all_ranks = all_ranks && maffei["points_by_n"].value(std::to_string(n), 0) > 0;
    long failed = 0;
    for (const auto& [name, counts] : maffei["checks"].items()) failed += counts["failed"].get<long>();
    return Outcome{r.passed && all_ranks && failed == 0 && maffei["points"].get<long>() >= 500,
                   std::to_string(maffei["points"].get<long>()) + " points, " + std::to_string(failed) +
                       " failed checks"};
  }, 60);

  criterion(4, "Hecke correspondences map to Hecke pairs", [&] {
    if (maffei.is_null()) return Outcome{false, "maffei suite did not run"};
    const Json& h = maffei["checks"]["hecke"];
    const long data_count = maffei["hecke_data"].get<long>();
    return Outcome{h["failed"].get<long>() == 0 && data_count > 0,
                   std::to_string(data_count) + " data, " + std::to_string(h["failed"].get<long>()) + " failed"};
  });

  criterion(5, "crystal suite (n <= 4, degree <= 8)", [] {
    const SuiteResult r = run_crystal_suite(4, 8);
    long failed = 0;
    for (const Json& c : r.report["cases"]) failed += c["passed"] == true ? 0 : 1;
    return Outcome{r.passed, std::to_string(r.report["cases"].size()) + " weights, " + std::to_string(failed) +
                                 " failed"};
  });

  criterion(6, "margin counts equal dim U/I_d; RSK bijection", [] {
    const SuiteResult grid = run_quotients_grid(4, 6);
    long cases = 0, failed = 0;
    for (const Json& c : grid.report["cases"]) {
      ++cases;
      for (const Json& f : c["facts"])
        if (f["name"] == "dim_Id" && f["values"]["margins"] != f["values"]["tensor"]) ++failed;
    }
    const SuiteResult q33 = run_quotients_suite(3, 3);
    bool rsk = false;
    for (const Json& f : q33.report["facts"])
      if (f["name"] == "rsk_round_trip") rsk = f["passed"] == true && f["values"]["matrices"] == 165;
    return Outcome{grid.passed && failed == 0 && rsk,
                   std::to_string(cases) + " (n, d) cases, RSK at n = 3, d = 3 " + (rsk ? "ok" : "broken")};
  });

  criterion(7, "a_k - a_(k+1) = <h_k, omega_w - alpha_v> on the same grid",
            [&] { return signs_tally("hk_checked", "hk_failed"); });

  criterion(8, "CLI determinism and exit codes", [] {
    const std::vector<std::string> commands{
        "theta --input " + data("p0.json"),
        "crystal --n 3 --w 2,1 --format dot",
        "crystal --n 4 --w 1,0,1 --format json",
        "verify --suite maffei --samples 60 --seed 11",
        "verify --suite quotients --n 3 --d 3",
        "verify --suite signs --n-max 3",
        "verify --suite crystal --n-max 3 --degree-max 4",
    };
    int mismatched = 0;
    for (const std::string& c : commands) {
      const Run a = run_cli(c), b = run_cli(c);
      if (a.code != 0 || a.out.empty() || a.out != b.out) ++mismatched;
    }
    const std::vector<std::pair<std::string, int>> goldens{
        {"theta --input " + data("p0.json"), 0},
        {"theta --input " + data("j_nonzero.json"), 1},
        {"theta --input " + data("unstable.json"), 1},
        {"theta --input " + data("malformed.json"), 2},
        {"theta --input " + data("does_not_exist.json"), 2},
        {"frobnicate", 2},
        {"verify --suite bogus", 2},
        {"crystal --n 3 --w 1,x", 2},
        {"verify --suite quotients --n 3 --d 3 --budget 10", 1},
        {"--help", 0},
    };
    int wrong = 0;
    for (const auto& [args, code] : goldens)
      if (run_cli(args).code != code) ++wrong;
    return Outcome{mismatched == 0 && wrong == 0, std::to_string(commands.size()) + " commands repeated, " +
                                                      std::to_string(mismatched) + " differed; " +
                                                      std::to_string(wrong) + " wrong exit codes"};
  });

  return failures == 0 ? 0 : 1;
}
