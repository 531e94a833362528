#include "geocrystal/suites.hpp"

#include <random>

namespace geocrystal {

namespace {

Json int_array(const IntVec& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

/// All vectors in {0..bound}^length, lexicographic.
std::vector<IntVec> grid(int length, int bound) {
  std::vector<IntVec> out;
  IntVec current = IntVec::Zero(length);
  while (true) {
    out.push_back(current);
    int pos = length - 1;
    while (pos >= 0 && current(pos) == bound) current(pos--) = 0;
    if (pos < 0) return out;
    ++current(pos);
  }
}

/// Every dominant w of rank n with degree at most max_degree, lexicographic.
std::vector<HighestWeight> weights_up_to(int n, int max_degree) {
  std::vector<HighestWeight> out;
  for (const IntVec& w : grid(n - 1, max_degree)) {
    const HighestWeight hw(w);
    if (hw.degree() <= max_degree) out.push_back(hw);
  }
  return out;
}

class Tally {
 public:
  void record(const std::string& name, bool ok) {
    auto it = std::find_if(rows_.begin(), rows_.end(), [&](const auto& r) { return r.first == name; });
    if (it == rows_.end()) it = rows_.insert(rows_.end(), {name, {0, 0}});
    ok ? ++it->second.first : ++it->second.second;
  }
  bool clean() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.second.second == 0; });
  }
  Json json() const {
    Json out = Json::object();
    for (const auto& [name, counts] : rows_) out[name] = Json{{"passed", counts.first}, {"failed", counts.second}};
    return out;
  }

 private:
  std::vector<std::pair<std::string, std::pair<long, long>>> rows_;
};

}  // namespace

SuiteResult run_maffei_suite(const MaffeiSuiteConfig& config) {
  require(config.samples >= 0, ErrorKind::Precondition, "sample count must be non-negative");
  if (config.w) require(config.n && *config.n == config.w->rank(), ErrorKind::Precondition, "--w needs a matching --n");
  std::mt19937_64 rng(config.seed);
  Tally tally;
  Json failures = Json::array();
  Json by_n = Json::object();
  long exhausted = 0, hecke_data = 0, points = 0, attempts = 0;
  const long max_attempts = 4L * config.samples + 40;
  while (points < config.samples && attempts < max_attempts) {
    ++attempts;
    const int n = config.n ? *config.n : 2 + static_cast<int>(attempts % 4);
    HighestWeight w;
    if (config.w) {
      w = *config.w;
    } else {
      do {
        IntVec coords(n - 1);
        for (int k = 0; k < n - 1; ++k) coords(k) = static_cast<int>(rng() % 3);
        w = HighestWeight(coords);
      } while (w.degree() < 1 || w.degree() > config.max_degree);
    }
    std::vector<Composition> support;
    const Partition lambda = hw_to_partition(w);
    for (const Composition& a : compositions(w.degree(), n))
      if (kostka(lambda, a) > 0) support.push_back(a);
    const Composition a = support[static_cast<std::size_t>(rng() % support.size())];
    const DimVec v = v_of_aw(a, w);
    const std::uint64_t point_seed = rng();
    QuiverRep r(v, w);
    try {
      r = sample_lambda_point(v, w, point_seed);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Exhausted) throw;
      ++exhausted;
      continue;
    }
    ++points;
    const std::string key = std::to_string(n);
    by_n[key] = by_n.value(key, 0) + 1;
    const ThetaContext ctx(w);
    std::vector<CheckResult> checks = theta_checks(r, ctx);
    const auto extra = [&](const std::string& name, auto&& fn) {
      try {
        checks.push_back({name, fn(), ""});
      } catch (const Error& e) {
        checks.push_back({name, false, e.what()});
      }
    };
    extra("gauge_invariance", [&] { return check_gauge_invariance(r, ctx, point_seed ^ 0x9e3779b97f4a7c15ULL); });
    extra("jordan_dominance", [&] { return check_jordan_dominance(r, ctx); });
    extra("hecke", [&] {
      const int data = check_hecke(r, ctx, point_seed + 1);
      if (data > 0) hecke_data += data;
      return data >= 0;
    });
    if (w.degree() == w[1]) extra("w1_special", [&] {
        const SpecialTheta special = theta_w1_special(r);
        return is_zero(special.x) && special.flag == theta(r, ctx);
      });
    for (const CheckResult& c : checks) {
      tally.record(c.name, c.passed);
      if (!c.passed && failures.size() < 10)
        failures.push_back(Json{{"check", c.name},
                                {"n", n},
                                {"w", int_array(w.w)},
                                {"v", int_array(v.v)},
                                {"point_seed", point_seed},
                                {"detail", c.detail}});
    }
  }
  const bool enough = points >= config.samples;
  Json report{{"schema_version", kSchemaVersion},
              {"suite", "maffei"},
              {"seed", config.seed},
              {"samples_requested", config.samples},
              {"points", points},
              {"sampler_exhausted", exhausted},
              {"points_by_n", by_n},
              {"hecke_data", hecke_data},
              {"checks", tally.json()},
              {"failures", failures}};
  if (config.w) report["w"] = int_array(config.w->w);
  const bool passed = tally.clean() && enough;
  report["passed"] = passed;
  return {"maffei", passed, std::move(report)};
}

SuiteResult run_signs_suite(int n_max, int entry_max) {
  require(n_max >= 2 && entry_max >= 0, ErrorKind::Precondition, "signs grid needs n_max >= 2 and entry_max >= 0");
  Json rows = Json::array();
  Json failures = Json::array();
  bool passed = true;
  for (int n = 2; n <= n_max; ++n) {
    long sign_checked = 0, sign_failed = 0, hk_checked = 0, hk_failed = 0;
    const std::vector<IntVec> cells = grid(n - 1, entry_max);
    for (const IntVec& wc : cells) {
      const HighestWeight w(wc);
      for (const IntVec& vc : cells) {
        const DimVec v(vc);
        const auto a = try_a_of_vw(v, w);
        if (!a) continue;
        const Weight mu = weight_of(w, v);
        for (int k = 1; k < n; ++k) {
          ++hk_checked;
          const int lhs = (*a)[k] - (*a)[k + 1];
          const int rhs = pair_with_coroot(mu, k);
          if (lhs != rhs) {
            ++hk_failed;
            if (failures.size() < 10)
              failures.push_back(Json{{"identity", "h_k"}, {"w", int_array(wc)}, {"v", int_array(vc)}, {"k", k}});
          }
          if (!comp_shift(*a, k, Shift::Plus)) continue;
          ++sign_checked;
          if (s_k_exponent(*a, k) != dim_and_sign(v, w, k).r_k) {
            ++sign_failed;
            if (failures.size() < 10)
              failures.push_back(Json{{"identity", "sign"}, {"w", int_array(wc)}, {"v", int_array(vc)}, {"k", k}});
          }
        }
      }
    }
    passed = passed && sign_failed == 0 && hk_failed == 0 && sign_checked > 0;
    rows.push_back(Json{{"n", n},
                        {"sign_checked", sign_checked},
                        {"sign_failed", sign_failed},
                        {"hk_checked", hk_checked},
                        {"hk_failed", hk_failed}});
  }
  Json report{{"schema_version", kSchemaVersion}, {"suite", "signs"}, {"n_max", n_max}, {"entry_max", entry_max},
              {"by_n", rows},           {"failures", failures}, {"passed", passed}};
  return {"signs", passed, std::move(report)};
}

SuiteResult run_crystal_suite(int n_max, int max_degree, long tensor_limit) {
  require(n_max >= 2 && max_degree >= 0, ErrorKind::Precondition, "crystal grid needs n_max >= 2");
  Json cases = Json::array();
  bool passed = true;
  std::map<std::pair<int, int>, Decomposition> decompositions;
  for (int n = 2; n <= n_max; ++n) {
    for (const HighestWeight& w : weights_up_to(n, max_degree)) {
      const CrystalGraph g = highest_weight_crystal(w);
      const Partition lambda = hw_to_partition(w);
      const int d = w.degree();
      const long expected_size = irrep_dim(lambda, n);
      const CrystalReport stem = stembridge_verify(g);
      bool kostka_ok = true;
      for (const Composition& a : compositions(d, n))
        kostka_ok = kostka_ok && weight_multiplicity(g, a) == kostka(lambda, a);
      bool strata_ok = true;
      for (int k = 1; k < n; ++k) strata_ok = strata_ok && strata_maps(g, k).passed;
      Json tensor = "skipped";
      bool tensor_ok = true;
      long power = 1;
      for (int t = 0; t < d && power <= tensor_limit; ++t) power *= n;
      if (power <= tensor_limit) {
        auto it = decompositions.find({n, d});
        if (it == decompositions.end()) it = decompositions.emplace(std::make_pair(n, d), decompose_tensor(n, d)).first;
        const Constituent* c = it->second.find(lambda);
        tensor_ok = c != nullptr && c->dimension == g.size();
        if (c != nullptr)
          for (const Composition& a : compositions(d, n)) {
            const auto found = c->weight_dims.find(a);
            tensor_ok = tensor_ok && (found == c->weight_dims.end() ? 0 : found->second) == weight_multiplicity(g, a);
          }
        tensor = tensor_ok;
      }
      const bool ok = stem.passed && g.size() == expected_size && kostka_ok && strata_ok && tensor_ok;
      passed = passed && ok;
      Json row{{"n", n},           {"w", int_array(w.w)},     {"size", g.size()},     {"irrep_dim", expected_size},
               {"stembridge", stem.passed}, {"kostka", kostka_ok}, {"strata", strata_ok}, {"tensor", tensor},
               {"passed", ok}};
      if (!stem.passed) row["violation"] = stem.violation;
      cases.push_back(std::move(row));
    }
  }
  Json report{{"schema_version", kSchemaVersion}, {"suite", "crystal"}, {"n_max", n_max},
              {"max_degree", max_degree},       {"cases", cases},      {"passed", passed}};
  return {"crystal", passed, std::move(report)};
}

SuiteResult run_quotients_suite(int n, int d, long budget) {
  require(n >= 2 && d >= 0, ErrorKind::Precondition, "quotients need n >= 2 and d >= 0");
  std::vector<Fact> facts;
  const Decomposition dec = decompose_tensor(n, d, budget);
  long power = 1;
  for (int t = 0; t < d; ++t) power *= n;
  facts.push_back({"decomposition_total", dec.total_dim() == power, {{"total", dec.total_dim()}, {"n^d", power}}});

  const long id_tensor = dim_quotient_Id(dec);
  const long id_weyl = dim_quotient_Id_weyl(n, d);
  long margins = 0;
  long rsk_checked = 0, rsk_failed = 0;
  const std::vector<Composition> comps = compositions(d, n);
  for (const Composition& d1 : comps) {
    for (const Composition& d2 : comps) {
      margins += margin_matrix_count(d1, d2);
      for (const IntMatrix& m : margin_matrices(d1, d2)) {
        ++rsk_checked;
        if (inverse_rsk(rsk(m), n, n) != m) ++rsk_failed;
      }
    }
  }
  long kostka_squares = 0;
  for (const Partition& lambda : partitions(d, n)) {
    long row = 0;
    for (const Composition& a : comps) row += kostka(lambda, a);
    kostka_squares += row * row;
  }
  facts.push_back({"dim_Id",
                   id_tensor == id_weyl && id_tensor == margins && id_tensor == kostka_squares,
                   {{"tensor", id_tensor}, {"weyl", id_weyl}, {"margins", margins}, {"kostka_squares", kostka_squares}}});
  facts.push_back({"rsk_round_trip", rsk_failed == 0 && rsk_checked == margins,
                   {{"matrices", rsk_checked}, {"failed", rsk_failed}}});

  Json readings = Json::array();
  for (const HighestWeight& w : weights_up_to(n, d)) {
    readings.push_back(Json{{"w", int_array(w.w)},
                            {"strict", is_partition_of(w, d)},
                            {"tensor_power", occurs_in_tensor_power(w, d)}});
    if (!is_partition_of(w, d)) continue;
    const long jw_crystal = dim_quotient_Jw(w);
    const long jw_tensor = dim_quotient_Jw_tensor(w, dec);
    std::string name = "dim_Jw(";
    for (Eigen::Index k = 0; k < w.w.size(); ++k) name += (k ? "," : "") + std::to_string(w.w(k));
    facts.push_back({name + ")", jw_crystal == jw_tensor && jw_crystal <= id_tensor,
                     {{"crystal", jw_crystal}, {"tensor", jw_tensor}, {"dim_Id", id_tensor}}});
  }
  if (n == 3 && d == 3)
    for (Fact& f : verify_sl3_example(irrep_dim, budget).facts) {
      f.name = "sl3_" + f.name;
      facts.push_back(std::move(f));
    }

  bool passed = true;
  Json fact_json = Json::array();
  for (const Fact& f : facts) {
    passed = passed && f.passed;
    fact_json.push_back(to_json(f));
  }
  Json report{{"schema_version", kSchemaVersion},
              {"suite", "quotients"},
              {"n", n},
              {"d", d},
              {"facts", fact_json},
              {"partition_readings", readings},
              {"passed", passed}};
  return {"quotients", passed, std::move(report)};
}

SuiteResult run_quotients_grid(int n_max, int d_max, long budget) {
  Json cases = Json::array();
  bool passed = true;
  for (int n = 2; n <= n_max; ++n)
    for (int d = 0; d <= d_max; ++d) {
      SuiteResult r = run_quotients_suite(n, d, budget);
      passed = passed && r.passed;
      cases.push_back(std::move(r.report));
    }
  Json report{{"schema_version", kSchemaVersion}, {"suite", "quotients"}, {"n_max", n_max},
              {"d_max", d_max},                  {"cases", cases},       {"passed", passed}};
  return {"quotients", passed, std::move(report)};
}

SuiteResult run_all_suites(std::uint64_t seed, long budget) {
  MaffeiSuiteConfig maffei;
  maffei.seed = seed;
  std::vector<SuiteResult> results{run_maffei_suite(maffei), run_signs_suite(), run_crystal_suite(),
                                   run_quotients_grid(4, 6, budget)};
  Json suites = Json::object();
  bool passed = true;
  for (SuiteResult& r : results) {
    passed = passed && r.passed;
    suites[r.name] = std::move(r.report);
  }
  Json report{{"schema_version", kSchemaVersion}, {"suite", "all"}, {"seed", seed}, {"suites", suites},
              {"passed", passed}};
  return {"all", passed, std::move(report)};
}

}  // namespace geocrystal
