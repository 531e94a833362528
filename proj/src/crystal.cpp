#include "geocrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace geocrystal {

std::string word_to_string(const Word& word, int n) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (n >= 10 && i > 0) out += ',';
    out += std::to_string(word[i]);
  }
  return out;
}

BracketResult tensor_word_ops(const Word& word, int k) {
  require(k >= 1, ErrorKind::OutOfRange, "operator index must be positive");
  // Unmatched positions after cancelling each k+1 against the nearest open k.
  std::vector<std::size_t> open;        // unmatched k, left to right
  std::vector<std::size_t> unmatched;   // unmatched k+1, left to right
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == k) {
      open.push_back(i);
    } else if (word[i] == k + 1) {
      if (!open.empty())
        open.pop_back();
      else
        unmatched.push_back(i);
    }
  }
  BracketResult out;
  out.epsilon = static_cast<int>(unmatched.size());
  out.phi = static_cast<int>(open.size());
  if (!unmatched.empty()) {
    Word e = word;
    e[unmatched.back()] = k;
    out.e = std::move(e);
  }
  if (!open.empty()) {
    Word f = word;
    f[open.front()] = k + 1;
    out.f = std::move(f);
  }
  return out;
}

Word seed_word(const Partition& lambda) {
  Word out;
  for (std::size_t row = 0; row < lambda.parts.size(); ++row)
    out.insert(out.end(), static_cast<std::size_t>(lambda.parts[row]), static_cast<int>(row) + 1);
  return out;
}

CrystalGraph::CrystalGraph(int n, std::vector<Word> vertices, std::vector<std::vector<int>> f_edges, int highest)
    : n_(n), vertices_(std::move(vertices)), f_(std::move(f_edges)), highest_(highest) {
  require(n_ >= 2, ErrorKind::InvalidRank, "crystal needs n >= 2");
  require(std::is_sorted(vertices_.begin(), vertices_.end()), ErrorKind::Precondition, "vertices must be sorted");
  require(static_cast<int>(f_.size()) == n_ - 1, ErrorKind::DimensionMismatch, "one f table per index");
  require(highest_ >= 0 && highest_ < size(), ErrorKind::OutOfRange, "highest vertex out of range");
  for (const Word& w : vertices_)
    for (int letter : w)
      require(letter >= 1 && letter <= n_, ErrorKind::OutOfRange, "letter outside 1..n");
  for (const auto& table : f_) {
    require(static_cast<int>(table.size()) == size(), ErrorKind::DimensionMismatch, "f table has the wrong size");
    std::vector<int> inverse(table.size(), kNone);
    for (int x = 0; x < size(); ++x) {
      const int y = table[static_cast<std::size_t>(x)];
      if (y == kNone) continue;
      require(y >= 0 && y < size(), ErrorKind::OutOfRange, "f edge leaves the vertex set");
      if (inverse[static_cast<std::size_t>(y)] != kNone) e_well_defined_ = false;
      inverse[static_cast<std::size_t>(y)] = x;
    }
    e_.push_back(std::move(inverse));
  }
}

std::optional<int> CrystalGraph::index_of(const Word& word) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), word);
  if (it == vertices_.end() || *it != word) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

namespace {

int string_length(const std::vector<int>& step, int x, int cap) {
  int length = 0;
  while (step[static_cast<std::size_t>(x)] != CrystalGraph::kNone) {
    x = step[static_cast<std::size_t>(x)];
    if (++length > cap) return -1;
  }
  return length;
}

}  // namespace

int CrystalGraph::epsilon(int k, int x) const { return string_length(e_.at(static_cast<std::size_t>(k - 1)), x, size()); }

int CrystalGraph::phi(int k, int x) const { return string_length(f_.at(static_cast<std::size_t>(k - 1)), x, size()); }

Composition CrystalGraph::composition(int x) const {
  std::vector<int> content(static_cast<std::size_t>(n_), 0);
  for (int letter : word(x)) ++content[static_cast<std::size_t>(letter - 1)];
  return Composition(content);
}

CrystalGraph CrystalGraph::with_f_edge(int k, int x, int target) const {
  auto edges = f_;
  edges.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(x)) = target;
  return CrystalGraph(n_, vertices_, std::move(edges), highest_);
}

namespace {

CrystalGraph close_under_f(int n, const Word& seed) {
  std::set<Word> seen{seed};
  std::deque<Word> queue{seed};
  while (!queue.empty()) {
    const Word current = queue.front();
    queue.pop_front();
    for (int k = 1; k < n; ++k) {
      auto f = tensor_word_ops(current, k).f;
      if (f && seen.insert(*f).second) queue.push_back(std::move(*f));
    }
  }
  std::vector<Word> vertices(seen.begin(), seen.end());
  std::vector<std::vector<int>> edges(static_cast<std::size_t>(n - 1),
                                      std::vector<int>(vertices.size(), CrystalGraph::kNone));
  const auto index = [&](const Word& w) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), w) - vertices.begin());
  };
  for (std::size_t x = 0; x < vertices.size(); ++x)
    for (int k = 1; k < n; ++k)
      if (auto f = tensor_word_ops(vertices[x], k).f)
        edges[static_cast<std::size_t>(k - 1)][x] = index(*f);
  const int highest = index(seed);
  return CrystalGraph(n, std::move(vertices), std::move(edges), highest);
}

}  // namespace

CrystalGraph standard_crystal(int n) { return close_under_f(n, Word{1}); }

CrystalGraph highest_weight_crystal(const HighestWeight& w) {
  const int n = w.rank();
  const Word seed = seed_word(hw_to_partition(w));
  for (int k = 1; k < n; ++k)
    require(tensor_word_ops(seed, k).epsilon == 0, ErrorKind::Internal,
            "seed word " + word_to_string(seed, n) + " is not killed by e_" + std::to_string(k));
  return close_under_f(n, seed);
}

VertexStats vertex_stats(const CrystalGraph& g, int x) {
  require(x >= 0 && x < g.size(), ErrorKind::OutOfRange, "vertex not in graph");
  VertexStats s{g.weight(x), g.composition(x), {}, {}};
  for (int k = 1; k < g.n(); ++k) {
    s.epsilon.push_back(g.epsilon(k, x));
    s.phi.push_back(g.phi(k, x));
  }
  return s;
}

long weight_multiplicity(const CrystalGraph& g, const Composition& a) {
  long count = 0;
  for (int x = 0; x < g.size(); ++x)
    if (g.composition(x) == a) ++count;
  return count;
}

namespace {

std::string at(const CrystalGraph& g, int x) { return "vertex " + word_to_string(g.word(x), g.n()); }

int cartan_entry(int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); }

/// Applies a sequence of operators (positive index f, negative index e); kNone if any step fails.
int apply_ops(const CrystalGraph& g, int x, std::initializer_list<int> ops) {
  for (auto it = std::rbegin(ops); it != std::rend(ops); ++it) {
    if (x == CrystalGraph::kNone) return x;
    x = *it > 0 ? g.f(*it, x) : g.e(-*it, x);
  }
  return x;
}

}  // namespace

CrystalReport stembridge_verify(const CrystalGraph& g) {
  CrystalReport report;
  const auto fail = [&](const std::string& why) {
    report.passed = false;
    report.violation = why;
    return report;
  };
  if (!g.e_well_defined()) return fail("two f edges share a target, e is not a function");
  const int n = g.n();
  for (int x = 0; x < g.size(); ++x) {
    for (int k = 1; k < n; ++k) {
      const int eps = g.epsilon(k, x);
      const int phi = g.phi(k, x);
      if (eps < 0 || phi < 0) return fail(at(g, x) + ": infinite " + std::to_string(k) + "-string");
      if (phi - eps != pair_with_coroot(g.weight(x), k))
        return fail(at(g, x) + ": phi_" + std::to_string(k) + " - eps_" + std::to_string(k) + " != <h_k, wt>");
      const int y = g.f(k, x);
      if (y != CrystalGraph::kNone && !(g.weight(y) == g.weight(x) - Weight::simple_root(n, k)))
        return fail(at(g, x) + ": wt(f_" + std::to_string(k) + " x) != wt(x) - alpha_" + std::to_string(k));
    }
  }
  // Delta_i delta_j(x) = eps_j(x) - eps_j(e_i x), Delta_i phi_j(x) = phi_j(e_i x) - phi_j(x),
  // nabla_i phi_j(x) = phi_j(x) - phi_j(f_i x), nabla_i delta_j(x) = eps_j(f_i x) - eps_j(x).
  const auto d_delta = [&](int i, int j, int x) { return g.epsilon(j, x) - g.epsilon(j, g.e(i, x)); };
  const auto d_phi = [&](int i, int j, int x) { return g.phi(j, g.e(i, x)) - g.phi(j, x); };
  const auto n_phi = [&](int i, int j, int x) { return g.phi(j, x) - g.phi(j, g.f(i, x)); };
  const auto n_delta = [&](int i, int j, int x) { return g.epsilon(j, g.f(i, x)) - g.epsilon(j, x); };
  for (int x = 0; x < g.size(); ++x) {
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        const std::string tag = at(g, x) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j);
        if (g.e(i, x) != CrystalGraph::kNone) {
          if (d_delta(i, j, x) + d_phi(i, j, x) != cartan_entry(i, j)) return fail(tag + ": P3 fails");
          if (i != j && (d_delta(i, j, x) > 0 || d_phi(i, j, x) > 0)) return fail(tag + ": P4 fails");
        }
        if (g.f(i, x) != CrystalGraph::kNone) {
          if (n_delta(i, j, x) + n_phi(i, j, x) != cartan_entry(i, j)) return fail(tag + ": P3' fails");
          if (i != j && (n_delta(i, j, x) > 0 || n_phi(i, j, x) > 0)) return fail(tag + ": P4' fails");
        }
        if (i == j) continue;
        if (g.e(i, x) != CrystalGraph::kNone && g.e(j, x) != CrystalGraph::kNone) {
          if (d_delta(i, j, x) == 0) {
            const int y = apply_ops(g, x, {-i, -j});
            if (y == CrystalGraph::kNone || y != apply_ops(g, x, {-j, -i}) || n_phi(j, i, y) != 0)
              return fail(tag + ": P5 fails");
          } else if (d_delta(i, j, x) == -1 && d_delta(j, i, x) == -1) {
            const int y = apply_ops(g, x, {-i, -j, -j, -i});
            if (y == CrystalGraph::kNone || y != apply_ops(g, x, {-j, -i, -i, -j}) || n_phi(i, j, y) != -1 ||
                n_phi(j, i, y) != -1)
              return fail(tag + ": P6 fails");
          }
        }
        if (g.f(i, x) != CrystalGraph::kNone && g.f(j, x) != CrystalGraph::kNone) {
          if (n_phi(i, j, x) == 0) {
            const int y = apply_ops(g, x, {i, j});
            if (y == CrystalGraph::kNone || y != apply_ops(g, x, {j, i}) || d_delta(j, i, y) != 0)
              return fail(tag + ": P5' fails");
          } else if (n_phi(i, j, x) == -1 && n_phi(j, i, x) == -1) {
            const int y = apply_ops(g, x, {i, j, j, i});
            if (y == CrystalGraph::kNone || y != apply_ops(g, x, {j, i, i, j}) || d_delta(i, j, y) != -1 ||
                d_delta(j, i, y) != -1)
              return fail(tag + ": P6' fails");
          }
        }
      }
    }
  }
  return report;
}

CrystalReport strata_maps(const CrystalGraph& g, int k) {
  CrystalReport report;
  require(k >= 1 && k < g.n(), ErrorKind::OutOfRange, "operator index out of range");
  const auto fail = [&](const std::string& why) {
    report.passed = false;
    report.violation = why;
    return report;
  };
  const auto direct = [&](const std::optional<Word>& w) -> int {
    if (!w) return CrystalGraph::kNone;
    const auto idx = g.index_of(*w);
    return idx ? *idx : -2;  // -2: the bracketing leaves the vertex set
  };
  for (int x = 0; x < g.size(); ++x) {
    const int c = g.epsilon(k, x);
    if (c < 0) return fail(at(g, x) + ": infinite string");
    if (static_cast<int>(report.stratum_sizes.size()) <= c) report.stratum_sizes.resize(static_cast<std::size_t>(c) + 1, 0);
    ++report.stratum_sizes[static_cast<std::size_t>(c)];
    int bottom = x;
    for (int t = 0; t < c; ++t) bottom = g.e(k, bottom);
    if (g.epsilon(k, bottom) != 0) return fail(at(g, x) + ": e_k^c does not reach the eps_k = 0 stratum");
    if ((g.e(k, x) == CrystalGraph::kNone) != (c == 0)) return fail(at(g, x) + ": e_k defined off the c > 0 stratum");
    const BracketResult ops = tensor_word_ops(g.word(x), k);
    const int e_direct = direct(ops.e);
    const int f_direct = direct(ops.f);
    if (ops.epsilon != c) return fail(at(g, x) + ": graph eps_k differs from bracketing");
    int e_composite = CrystalGraph::kNone;
    if (c >= 1) {
      e_composite = bottom;
      for (int t = 0; t < c - 1; ++t) e_composite = g.f(k, e_composite);
    }
    int f_composite = bottom;
    for (int t = 0; t < c + 1 && f_composite != CrystalGraph::kNone; ++t) f_composite = g.f(k, f_composite);
    if (e_composite != e_direct || e_composite != g.e(k, x)) return fail(at(g, x) + ": e_k composite differs");
    if (f_composite != f_direct || f_composite != g.f(k, x)) return fail(at(g, x) + ": f_k composite differs");
    if (g.f(k, x) != CrystalGraph::kNone && g.epsilon(k, g.f(k, x)) != c + 1)
      return fail(at(g, x) + ": eps_k(f_k x) != eps_k(x) + 1");
  }
  return report;
}

std::string to_dot(const CrystalGraph& g) {
  std::ostringstream out;
  out << "digraph crystal {\n";
  out << "  // schema_version 1\n";
  for (int x = 0; x < g.size(); ++x) {
    const Composition a = g.composition(x);
    out << "  v" << x << " [label=\"(";
    for (std::size_t i = 0; i < a.parts.size(); ++i) out << (i ? "," : "") << a.parts[i];
    out << ")\", word=\"" << word_to_string(g.word(x), g.n()) << "\"];\n";
  }
  for (int k = 1; k < g.n(); ++k)
    for (int x = 0; x < g.size(); ++x)
      if (g.f(k, x) != CrystalGraph::kNone)
        out << "  v" << x << " -> v" << g.f(k, x) << " [label=\"" << k << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace geocrystal
