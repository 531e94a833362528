#include "geocrystal/crystal.hpp"
#include "geocrystal/repalg.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace geocrystal;

namespace {

// Semistandard tableaux of shape lambda with entries in 1..n, filled cell by
// cell in row-reading order; returns the content of each.
std::vector<Composition> ssyt_contents(const Partition& lambda, int n) {
  std::vector<std::vector<int>> t;
  for (int row : lambda.parts) t.emplace_back(static_cast<std::size_t>(row), 0);
  std::vector<Composition> out;
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t r, std::size_t c) {
    if (r == t.size()) {
      std::vector<int> content(static_cast<std::size_t>(n), 0);
      for (const auto& row : t)
        for (int x : row) ++content[static_cast<std::size_t>(x - 1)];
      out.emplace_back(content);
      return;
    }
    const std::size_t nr = c + 1 == t[r].size() ? r + 1 : r;
    const std::size_t nc = c + 1 == t[r].size() ? 0 : c + 1;
    int low = 1;
    if (c > 0) low = std::max(low, t[r][c - 1]);
    if (r > 0) low = std::max(low, t[r - 1][c] + 1);
    for (int x = low; x <= n; ++x) {
      t[r][c] = x;
      fill(nr, nc);
    }
  };
  fill(0, 0);
  return out;
}

// Weyl dimension formula over positive roots e_i - e_j.
long weyl_dim(const Partition& lambda, int n) {
  auto part = [&](int i) { return i < lambda.length() ? lambda.parts[static_cast<std::size_t>(i)] : 0; };
  long num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= part(i) - part(j) + j - i;
      den *= j - i;
    }
  return num / den;
}

std::vector<HighestWeight> weights_up_to(int n, int max_degree) {
  std::vector<HighestWeight> out;
  IntVec w = IntVec::Zero(n - 1);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == n - 1) {
      if (HighestWeight(w).degree() <= max_degree) out.emplace_back(w);
      return;
    }
    for (int x = 0; (pos + 1) * x <= max_degree; ++x) {
      w(pos) = x;
      fill(pos + 1);
    }
    w(pos) = 0;
  };
  fill(0);
  return out;
}

}  // namespace

TEST_CASE("bracketing on words") {
  const BracketResult single = tensor_word_ops({2}, 1);
  CHECK(single.epsilon == 1);
  CHECK(single.phi == 0);

  const BracketResult ones = tensor_word_ops({1, 1}, 1);
  CHECK(ones.phi == 2);
  CHECK(ones.epsilon == 0);
  Word w{1, 1};
  for (int t = 0; t < 2; ++t) w = *tensor_word_ops(w, 1).f;
  CHECK(w == Word{2, 2});
  CHECK_FALSE(tensor_word_ops(w, 1).f.has_value());
  for (int t = 0; t < 2; ++t) w = *tensor_word_ops(w, 1).e;
  CHECK(w == Word{1, 1});

  const BracketResult mixed = tensor_word_ops({2, 1}, 1);
  REQUIRE(mixed.f.has_value());
  CHECK(*tensor_word_ops(*mixed.f, 1).e == Word{2, 1});
  CHECK(mixed.epsilon == 1);
  CHECK(mixed.phi == 1);
  // "12" is a matched pair.
  CHECK(tensor_word_ops({1, 2}, 1).epsilon == 0);
  CHECK(tensor_word_ops({1, 2}, 1).phi == 0);

  const Word seed = seed_word(Partition{2, 1});
  CHECK(seed == Word{1, 1, 2});
  CHECK(tensor_word_ops(seed, 1).epsilon == 0);
  CHECK(tensor_word_ops(seed, 2).epsilon == 0);
  CHECK(word_to_string(seed, 3) == "112");
  CHECK(word_to_string({10, 2}, 12) == "10,2");
}

TEST_CASE("inverse pairs and string lengths on random words") {
  for (int n = 2; n <= 4; ++n)
    for (int len = 1; len <= 5; ++len) {
      Word w(static_cast<std::size_t>(len), 1);
      while (true) {
        for (int k = 1; k < n; ++k) {
          const BracketResult b = tensor_word_ops(w, k);
          int plus = 0, minus = 0;
          for (int x : w) {
            plus += x == k;
            minus += x == k + 1;
          }
          CHECK(b.phi - b.epsilon == plus - minus);
          if (b.f) {
            CHECK(*tensor_word_ops(*b.f, k).e == w);
            CHECK(tensor_word_ops(*b.f, k).epsilon == b.epsilon + 1);
          }
          if (b.e) CHECK(*tensor_word_ops(*b.e, k).f == w);
          CHECK(b.e.has_value() == (b.epsilon > 0));
          CHECK(b.f.has_value() == (b.phi > 0));
        }
        std::size_t pos = 0;
        while (pos < w.size() && w[pos] == n) w[pos++] = 1;
        if (pos == w.size()) break;
        ++w[pos];
      }
    }
}

TEST_CASE("standard crystal") {
  const CrystalGraph two = standard_crystal(2);
  CHECK(two.size() == 2);
  CHECK(two.f(1, 0) == 1);
  const CrystalGraph three = standard_crystal(3);
  CHECK(three.f(1, 0) == 1);
  CHECK(three.f(2, 1) == 2);
  CHECK(three.f(2, 0) == CrystalGraph::kNone);
  CHECK(three.epsilon(1, 1) == 1);
  CHECK(three.phi(1, 1) == 0);
  for (int n = 2; n <= 5; ++n) CHECK(stembridge_verify(standard_crystal(n)).passed);
}

TEST_CASE("highest-weight crystals") {
  const CrystalGraph b2 = highest_weight_crystal(HighestWeight{2});
  CHECK(b2.size() == 3);
  const CrystalGraph trivial = highest_weight_crystal(HighestWeight{0, 0});
  CHECK(trivial.size() == 1);
  const VertexStats t = vertex_stats(trivial, 0);
  CHECK(t.epsilon == std::vector<int>{0, 0});
  CHECK(t.phi == std::vector<int>{0, 0});

  const CrystalGraph adj = highest_weight_crystal(HighestWeight{1, 1});
  CHECK(adj.size() == 8);
  CHECK(stembridge_verify(adj).passed);
  const VertexStats hw = vertex_stats(adj, adj.highest());
  CHECK(hw.a == Composition{2, 1, 0});
  CHECK(hw.epsilon == std::vector<int>{0, 0});
  int lowest = -1;
  for (int x = 0; x < adj.size(); ++x)
    if (adj.f(1, x) == CrystalGraph::kNone && adj.f(2, x) == CrystalGraph::kNone) lowest = x;
  REQUIRE(lowest >= 0);
  const VertexStats lo = vertex_stats(adj, lowest);
  CHECK(lo.a == Composition{0, 1, 2});
  CHECK(lo.phi == std::vector<int>{0, 0});
  for (int x = 0; x < adj.size(); ++x) {
    const VertexStats s = vertex_stats(adj, x);
    for (int k = 1; k <= 2; ++k) CHECK(s.phi[k - 1] - s.epsilon[k - 1] == pair_with_coroot(s.wt, k));
  }
  CHECK_THROWS_AS(vertex_stats(adj, 8), std::exception);

  CHECK(weight_multiplicity(adj, Composition{1, 1, 1}) == 2);
  CHECK(weight_multiplicity(adj, Composition{2, 1, 0}) == 1);
  CHECK(weight_multiplicity(adj, Composition{3, 0, 0}) == 0);
}

TEST_CASE("crystals match Weyl dimensions and tableau counts") {
  for (int n = 2; n <= 4; ++n)
    for (const HighestWeight& w : weights_up_to(n, n == 4 ? 6 : 8)) {
      const Partition lambda = hw_to_partition(w);
      const CrystalGraph g = highest_weight_crystal(w);
      CHECK(g.size() == weyl_dim(lambda, n));
      const CrystalReport report = stembridge_verify(g);
      CHECK_MESSAGE(report.passed, report.violation);
      std::map<Composition, long> counts;
      for (const Composition& a : ssyt_contents(lambda, n)) ++counts[a];
      for (const Composition& a : compositions(lambda.size(), n)) {
        const long expected = counts.count(a) ? counts[a] : 0;
        CHECK(weight_multiplicity(g, a) == expected);
        CHECK(kostka(lambda, a) == expected);
      }
      for (int k = 1; k < n; ++k) CHECK(strata_maps(g, k).passed);
      // f_k lowers the weight by alpha_k wherever it is defined.
      for (int x = 0; x < g.size(); ++x)
        for (int k = 1; k < n; ++k)
          if (g.f(k, x) != CrystalGraph::kNone)
            CHECK(g.weight(g.f(k, x)) == g.weight(x) - Weight::simple_root(n, k));
    }
}

TEST_CASE("strata of the adjoint crystal") {
  const CrystalGraph adj = highest_weight_crystal(HighestWeight{1, 1});
  const CrystalReport r = strata_maps(adj, 1);
  CHECK(r.passed);
  CHECK(r.stratum_sizes == std::vector<int>{4, 3, 1});
  int total = 0;
  for (int s : r.stratum_sizes) total += s;
  CHECK(total == 8);
  for (int k = 1; k <= 2; ++k) CHECK(adj.e(k, adj.highest()) == CrystalGraph::kNone);
}

TEST_CASE("tampered crystals are rejected") {
  const CrystalGraph adj = highest_weight_crystal(HighestWeight{1, 1});
  int source = -1;
  for (int x = 0; x < adj.size() && source < 0; ++x)
    if (adj.f(1, x) != CrystalGraph::kNone) source = x;
  REQUIRE(source >= 0);
  bool caught = false;
  for (int target = 0; target < adj.size(); ++target) {
    if (target == adj.f(1, source)) continue;
    const CrystalReport r = stembridge_verify(adj.with_f_edge(1, source, target));
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.violation.empty());
    caught = true;
  }
  CHECK(caught);
}

TEST_CASE("DOT output") {
  const std::string dot = to_dot(highest_weight_crystal(HighestWeight{2}));
  const std::string golden = R"dot(digraph crystal {
  // schema_version 1
  v0 [label="(2,0)", word="11"];
  v1 [label="(1,1)", word="21"];
  v2 [label="(0,2)", word="22"];
  v0 -> v1 [label="1"];
  v1 -> v2 [label="1"];
}
)dot";
  CHECK(dot == golden);
  const std::string adj = to_dot(highest_weight_crystal(HighestWeight{1, 1}));
  CHECK(std::count(adj.begin(), adj.end(), '\n') > 8);
  CHECK(adj == to_dot(highest_weight_crystal(HighestWeight{1, 1})));
}
