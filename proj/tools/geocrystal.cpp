// geocrystal: verification runs and artifact emission.
// Exit codes: 0 success, 1 failed invariant or predicate, 2 usage or parse error.

#include "geocrystal/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace geocrystal;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string suite;
  std::optional<std::uint64_t> seed;
  std::optional<int> n, n_max, entry_max, d, d_max, degree_max;
  std::optional<std::string> w;
  int samples = 500;
  std::optional<long> budget;
  std::string format = "text";
  std::string input;
  std::string output;
};

HighestWeight parse_weight(const std::string& text, const std::optional<int>& n) {
  std::vector<int> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(item, &used);
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      coords.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("--w must be a comma-separated list of non-negative integers, got \"" + text + "\"");
    }
  }
  if (coords.empty()) throw UsageError("--w is empty");
  if (n && *n != static_cast<int>(coords.size()) + 1)
    throw UsageError("--w needs n-1 = " + std::to_string(*n - 1) + " entries");
  IntVec w(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) w(static_cast<Eigen::Index>(i)) = coords[i];
  return HighestWeight(w);
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

long budget_of(const Options& o) {
  if (!o.budget) return size_budget();
  if (*o.budget <= 0) throw UsageError("--budget must be positive");
  return *o.budget;
}

std::uint64_t require_seed(const Options& o, const std::string& suite) {
  if (!o.seed) throw UsageError("--seed is required for the " + suite + " suite");
  return *o.seed;
}

int cmd_verify(const Options& o) {
  const long budget = budget_of(o);
  SuiteResult result;
  if (o.suite == "maffei") {
    MaffeiSuiteConfig config;
    config.seed = require_seed(o, "maffei");
    config.samples = o.samples;
    if (o.samples < 0) throw UsageError("--samples must be non-negative");
    if (o.n && *o.n < 2) throw UsageError("--n must be at least 2");
    if (o.w && !o.n) throw UsageError("--w needs --n");
    config.n = o.n;
    if (o.w) config.w = parse_weight(*o.w, o.n);
    result = run_maffei_suite(config);
  } else if (o.suite == "signs") {
    const int n_max = o.n_max.value_or(6);
    if (n_max < 2) throw UsageError("--n-max must be at least 2");
    result = run_signs_suite(n_max, o.entry_max.value_or(4));
  } else if (o.suite == "crystal") {
    const int n_max = o.n_max.value_or(4);
    if (n_max < 2) throw UsageError("--n-max must be at least 2");
    result = run_crystal_suite(n_max, o.degree_max.value_or(8));
  } else if (o.suite == "quotients") {
    if (o.n.has_value() != o.d.has_value()) throw UsageError("--n and --d go together for the quotients suite");
    if (o.n) {
      if (*o.n < 2 || *o.d < 0) throw UsageError("quotients need n >= 2 and d >= 0");
      result = run_quotients_suite(*o.n, *o.d, budget);
    } else {
      result = run_quotients_grid(o.n_max.value_or(4), o.d_max.value_or(6), budget);
    }
  } else if (o.suite == "all") {
    result = run_all_suites(require_seed(o, "all"), budget);
  } else {
    throw UsageError("unknown suite " + o.suite);
  }
  emit(result.report.dump(2) + "\n", o.output);
  return result.passed ? kOk : kFailed;
}

std::string crystal_text(const CrystalGraph& g, const HighestWeight& w) {
  std::ostringstream out;
  out << "crystal n=" << g.n() << " w=(";
  for (Eigen::Index k = 0; k < w.w.size(); ++k) out << (k ? "," : "") << w.w(k);
  out << ") size=" << g.size() << " schema_version=" << kSchemaVersion << "\n";
  const auto list = [](const std::vector<int>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "]";
  };
  for (int x = 0; x < g.size(); ++x) {
    const VertexStats s = vertex_stats(g, x);
    out << word_to_string(g.word(x), g.n()) << " a=" << list(s.a.parts) << " eps=" << list(s.epsilon)
        << " phi=" << list(s.phi) << "\n";
  }
  for (int k = 1; k < g.n(); ++k)
    for (int x = 0; x < g.size(); ++x)
      if (g.f(k, x) != CrystalGraph::kNone)
        out << word_to_string(g.word(x), g.n()) << " -" << k << "-> " << word_to_string(g.word(g.f(k, x)), g.n())
            << "\n";
  return out.str();
}

int cmd_crystal(const Options& o) {
  if (!o.n || !o.w) throw UsageError("crystal needs --n and --w");
  if (*o.n < 2) throw UsageError("--n must be at least 2");
  const HighestWeight w = parse_weight(*o.w, o.n);
  const CrystalGraph g = highest_weight_crystal(w);
  if (o.format == "dot")
    emit(to_dot(g), o.output);
  else if (o.format == "json")
    emit(to_json(g).dump(2) + "\n", o.output);
  else if (o.format == "text")
    emit(crystal_text(g, w), o.output);
  else
    throw UsageError("--format must be dot, json or text");
  return kOk;
}

int cmd_theta(const Options& o) {
  std::ifstream in(o.input, std::ios::binary);
  if (!in) throw UsageError("cannot read " + o.input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const QuiverRep r = quiver_from_json(parse_json(buffer.str()));
  if (auto why = lambda_violation(r)) {
    std::cerr << "in_Lambda: " << *why << "\n";
    return kFailed;
  }
  if (!is_stable(r)) {
    std::cerr << "is_stable: im i does not generate V\n";
    return kFailed;
  }
  const ThetaContext ctx(r.w());
  const Flag flag = theta(r, ctx);
  Json checks = Json::array();
  bool passed = true;
  for (const CheckResult& c : theta_checks(r, ctx)) {
    passed = passed && c.passed;
    checks.push_back(to_json(c));
  }
  const Json report{{"schema_version", kSchemaVersion},
                    {"point", to_json(r)},
                    {"flag", to_json(flag)},
                    {"checks", checks},
                    {"passed", passed}};
  emit(report.dump(2) + "\n", o.output);
  return passed ? kOk : kFailed;
}

void add_verify_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Seed for sampling suites (required for maffei and all)");
  cmd->add_option("--n", o.n, "Rank parameter n of sl_n");
  cmd->add_option("--w", o.w, "Highest weight as comma-separated coordinates");
  cmd->add_option("--samples", o.samples, "Number of sampled points")->capture_default_str();
  cmd->add_option("--n-max", o.n_max, "Largest n on a grid");
  cmd->add_option("--entry-max", o.entry_max, "Largest entry of v and w on the signs grid");
  cmd->add_option("--d", o.d, "Tensor degree d");
  cmd->add_option("--d-max", o.d_max, "Largest d on the quotients grid");
  cmd->add_option("--degree-max", o.degree_max, "Largest sum k w_k on the crystal grid");
  cmd->add_option("--budget", o.budget, "Bound on n^d (overrides GEOCRYSTAL_BUDGET)");
  cmd->add_option("--output", o.output, "Write the report here instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the flag and quiver constructions of U(sl_n)"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON report");
  verify->add_option("--suite", o.suite, "maffei | signs | crystal | quotients | all")
      ->required()
      ->check(CLI::IsMember({"maffei", "signs", "crystal", "quotients", "all"}));
  add_verify_options(verify, o);

  auto* quotients = app.add_subcommand("quotients", "Alias for verify --suite quotients");
  add_verify_options(quotients, o);

  auto* crystal = app.add_subcommand("crystal", "Emit the crystal B(w)");
  crystal->add_option("--n", o.n, "Rank parameter n of sl_n")->required();
  crystal->add_option("--w", o.w, "Highest weight as comma-separated coordinates")->required();
  crystal->add_option("--format", o.format, "dot | json | text")
      ->check(CLI::IsMember({"dot", "json", "text"}))
      ->capture_default_str();
  crystal->add_option("--output", o.output, "Write the graph here instead of stdout");

  auto* theta_cmd = app.add_subcommand("theta", "Map a Lambda-point (JSON) to its flag and check the invariants");
  theta_cmd->add_option("--input", o.input, "QuiverRep JSON file")->required();
  theta_cmd->add_option("--output", o.output, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o);
    if (quotients->parsed()) {
      o.suite = "quotients";
      return cmd_verify(o);
    }
    if (crystal->parsed()) return cmd_crystal(o);
    if (theta_cmd->parsed()) return cmd_theta(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kUsage : kFailed;
  }
  return kUsage;
}
