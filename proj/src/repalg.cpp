#include "geocrystal/repalg.hpp"

#include "geocrystal/linalg.hpp"
#include "geocrystal/rational.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

namespace geocrystal {

using linalg::Index;

long size_budget() {
  const char* env = std::getenv("GEOCRYSTAL_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  try {
    std::size_t used = 0;
    const long value = std::stol(env, &used);
    if (used == std::string(env).size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Parse, std::string("GEOCRYSTAL_BUDGET is not a positive integer: ") + env);
}

namespace {

long checked_power(int n, int d, long budget) {
  long dim = 1;
  for (int t = 0; t < d; ++t) {
    dim *= n;
    require(dim <= budget, ErrorKind::BudgetExceeded,
            std::to_string(n) + "^" + std::to_string(d) + " exceeds the size budget " + std::to_string(budget));
  }
  return dim;
}

}  // namespace

TensorAction::TensorAction(int n, int d, long budget) : n_(n), d_(d) {
  require(n >= 2, ErrorKind::InvalidRank, "tensor action needs n >= 2");
  require(d >= 0, ErrorKind::OutOfRange, "tensor degree must be non-negative");
  dim_ = checked_power(n, d, budget);
  using Triplet = Eigen::Triplet<std::int64_t>;
  for (int k = 1; k < n; ++k) {
    std::vector<Triplet> e, f, h;
    for (long s = 0; s < dim_; ++s) {
      Word w = word(s);
      std::int64_t weight = 0;
      for (int p = 0; p < d; ++p) {
        const int letter = w[static_cast<std::size_t>(p)];
        if (letter == k + 1) {
          w[static_cast<std::size_t>(p)] = k;
          e.emplace_back(index(w), s, 1);
          w[static_cast<std::size_t>(p)] = letter;
          --weight;
        } else if (letter == k) {
          w[static_cast<std::size_t>(p)] = k + 1;
          f.emplace_back(index(w), s, 1);
          w[static_cast<std::size_t>(p)] = letter;
          ++weight;
        }
      }
      if (weight != 0) h.emplace_back(s, s, weight);
    }
    SparseInt me(dim_, dim_), mf(dim_, dim_), mh(dim_, dim_);
    me.setFromTriplets(e.begin(), e.end());
    mf.setFromTriplets(f.begin(), f.end());
    mh.setFromTriplets(h.begin(), h.end());
    e_.push_back(std::move(me));
    f_.push_back(std::move(mf));
    h_.push_back(std::move(mh));
  }
}

Word TensorAction::word(long index) const {
  Word w(static_cast<std::size_t>(d_));
  for (int p = d_ - 1; p >= 0; --p) {
    w[static_cast<std::size_t>(p)] = static_cast<int>(index % n_) + 1;
    index /= n_;
  }
  return w;
}

long TensorAction::index(const Word& word) const {
  long out = 0;
  for (int letter : word) out = out * n_ + (letter - 1);
  return out;
}

bool TensorAction::relations_hold() const {
  const auto equal = [](const SparseInt& a, const SparseInt& b) {
    SparseInt diff = a - b;
    diff.prune(std::int64_t(0));
    return diff.nonZeros() == 0;
  };
  for (int k = 1; k < n_; ++k) {
    const SparseInt ef = e(k) * f(k), fe = f(k) * e(k);
    const SparseInt he = h(k) * e(k), eh = e(k) * h(k);
    const SparseInt hf = h(k) * f(k), fh = f(k) * h(k);
    if (!equal(SparseInt(ef - fe), h(k))) return false;
    if (!equal(SparseInt(he - eh), SparseInt(2 * e(k)))) return false;
    if (!equal(SparseInt(hf - fh), SparseInt(-2 * f(k)))) return false;
  }
  return true;
}

long Decomposition::total_dim() const {
  long total = 0;
  for (const Constituent& c : constituents) total += c.multiplicity * c.dimension;
  return total;
}

const Constituent* Decomposition::find(const Partition& lambda) const {
  for (const Constituent& c : constituents)
    if (c.lambda == lambda) return &c;
  return nullptr;
}

namespace {

Partition strip_zeros(const Composition& a) {
  std::vector<int> parts;
  for (int p : a.parts)
    if (p > 0) parts.push_back(p);
  return Partition(parts);
}

bool is_dominant(const Composition& a) { return std::is_sorted(a.parts.rbegin(), a.parts.rend()); }

/// Content shifted by moving one letter: from k+1 to k (raise) or from k to k+1 (lower).
std::optional<Composition> move_letter(const Composition& a, int k, bool raise) {
  std::vector<int> p = a.parts;
  const std::size_t from = raise ? static_cast<std::size_t>(k) : static_cast<std::size_t>(k - 1);
  const std::size_t to = raise ? static_cast<std::size_t>(k - 1) : static_cast<std::size_t>(k);
  if (p[from] == 0) return std::nullopt;
  --p[from];
  ++p[to];
  return Composition(p);
}

/// Weight-space bookkeeping for the tensor basis.
struct WeightSpaces {
  std::map<Composition, std::vector<long>> members;
  std::vector<Index> position;  // position of each basis index inside its weight space
};

WeightSpaces weight_spaces(const TensorAction& action) {
  WeightSpaces out;
  out.position.resize(static_cast<std::size_t>(action.dim()));
  for (long s = 0; s < action.dim(); ++s) {
    std::vector<int> content(static_cast<std::size_t>(action.n()), 0);
    for (int letter : action.word(s)) ++content[static_cast<std::size_t>(letter - 1)];
    auto& list = out.members[Composition(content)];
    out.position[static_cast<std::size_t>(s)] = static_cast<Index>(list.size());
    list.push_back(s);
  }
  return out;
}

/// Block of op from the weight space `source` into the weight space `target`.
RatMat block(const SparseInt& op, const WeightSpaces& spaces, const Composition& source, const Composition& target) {
  const auto& src = spaces.members.at(source);
  const auto& dst = spaces.members.at(target);
  RatMat out = RatMat::Zero(static_cast<Index>(dst.size()), static_cast<Index>(src.size()));
  for (std::size_t c = 0; c < src.size(); ++c)
    for (SparseInt::InnerIterator it(op, src[c]); it; ++it)
      out(spaces.position[static_cast<std::size_t>(it.row())], static_cast<Index>(c)) += Rational(it.value());
  return out;
}

int level(const Composition& a) {
  int out = 0;
  for (int i = 0; i < a.n(); ++i) out += i * a.parts[static_cast<std::size_t>(i)];
  return out;
}

/// Weight-space dimensions of the submodule generated by u in weight space `top`.
std::map<Composition, long> generate_module(const TensorAction& action, const WeightSpaces& spaces,
                                            const Composition& top, const RatVec& u) {
  using Key = std::pair<int, Composition>;
  std::map<Composition, linalg::RatSubspace> span;
  std::set<Key> pending;
  span.emplace(top, linalg::RatSubspace::span(u));
  pending.insert({level(top), top});
  while (!pending.empty()) {
    const Composition mu = pending.begin()->second;
    pending.erase(pending.begin());
    const linalg::RatSubspace& here = span.at(mu);
    for (int k = 1; k < action.n(); ++k) {
      const auto lower = move_letter(mu, k, false);
      if (!lower) continue;
      RatMat image = block(action.f(k), spaces, mu, *lower) * here.basis();
      auto it = span.find(*lower);
      if (it == span.end())
        it = span.emplace(*lower, linalg::RatSubspace::zero(static_cast<Index>(spaces.members.at(*lower).size()))).first;
      it->second = linalg::sum(it->second, linalg::RatSubspace::span(image));
      pending.insert({level(*lower), *lower});
    }
  }
  std::map<Composition, long> dims;
  for (const auto& [mu, s] : span)
    if (s.dim() > 0) dims[mu] = static_cast<long>(s.dim());
  return dims;
}

}  // namespace

Decomposition decompose_tensor(int n, int d, long budget) {
  const TensorAction action(n, d, budget);
  const WeightSpaces spaces = weight_spaces(action);
  Decomposition out{n, d, {}};
  for (auto it = spaces.members.rbegin(); it != spaces.members.rend(); ++it) {
    const Composition& lambda = it->first;
    if (!is_dominant(lambda)) continue;
    // Singular vectors: joint kernel of the raising blocks.
    std::vector<RatMat> blocks;
    Index rows = 0;
    for (int k = 1; k < n; ++k) {
      if (const auto raised = move_letter(lambda, k, true)) {
        blocks.push_back(block(action.e(k), spaces, lambda, *raised));
        rows += blocks.back().rows();
      }
    }
    RatMat stacked(rows, static_cast<Index>(it->second.size()));
    Index row = 0;
    for (const RatMat& b : blocks) {
      stacked.middleRows(row, b.rows()) = b;
      row += b.rows();
    }
    const linalg::RatSubspace singular = linalg::kernel(stacked);
    if (singular.is_zero()) continue;
    Constituent c;
    c.lambda = strip_zeros(lambda);
    c.hw = partition_to_hw(c.lambda, n);
    c.multiplicity = static_cast<long>(singular.dim());
    c.weight_dims = generate_module(action, spaces, lambda, singular.basis().col(0));
    for (const auto& [mu, dim] : c.weight_dims) c.dimension += dim;
    out.constituents.push_back(std::move(c));
  }
  return out;
}

long irrep_dim(const Partition& lambda, int n) {
  require(lambda.length() <= n, ErrorKind::Precondition,
          "partition has " + std::to_string(lambda.length()) + " rows, more than n = " + std::to_string(n));
  const Partition conj = lambda.conjugate();
  Integer num = 1, den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.parts[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda.parts[static_cast<std::size_t>(i)] - j - 1;
      const int leg = conj.parts[static_cast<std::size_t>(j)] - i - 1;
      num *= n + j - i;
      den *= arm + leg + 1;
    }
  }
  return static_cast<long>(num / den);
}

namespace {

std::vector<int> hw_key(const HighestWeight& w) { return {w.w.data(), w.w.data() + w.w.size()}; }

long dim_Id_weyl(int n, int d, const IrrepDimFn& dim_fn) {
  std::map<std::vector<int>, long> dims;
  for (const Partition& lambda : partitions(d, n)) dims[hw_key(partition_to_hw(lambda, n))] = dim_fn(lambda, n);
  long total = 0;
  for (const auto& [key, dim] : dims) total += dim * dim;
  return total;
}

long dim_Id_tensor(const Decomposition& dec) {
  std::map<std::vector<int>, long> dims;
  for (const Constituent& c : dec.constituents) dims[hw_key(c.hw)] = c.dimension;
  long total = 0;
  for (const auto& [key, dim] : dims) total += dim * dim;
  return total;
}

std::vector<WeightStatus> dominant_weights_in(const HighestWeight& w, const CrystalGraph& g) {
  const int n = w.rank();
  std::vector<WeightStatus> out;
  for (const Composition& a : compositions(w.degree(), n)) {
    if (!is_dominant(a)) continue;
    DimVec v;
    try {
      v = v_of_aw(a, w);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotInImage) continue;
      throw;
    }
    WeightStatus s;
    s.mu = partition_to_hw(strip_zeros(a), n);
    s.expressible = true;
    s.v = v;
    s.multiplicity = weight_multiplicity(g, a);
    out.push_back(std::move(s));
  }
  return out;
}

long dim_Jw_crystal(const HighestWeight& w, const IrrepDimFn& dim_fn) {
  const CrystalGraph g = highest_weight_crystal(w);
  long total = 0;
  for (const WeightStatus& s : dominant_weights_in(w, g)) {
    if (!s.is_weight()) continue;
    const long dim = dim_fn(hw_to_partition(s.mu), w.rank());
    total += dim * dim;
  }
  return total;
}

long dim_Jw_from(const HighestWeight& w, const Decomposition& dec) {
  const Constituent* top = dec.find(hw_to_partition(w));
  require(top != nullptr, ErrorKind::Internal, "L(w) missing from the tensor decomposition");
  long total = 0;
  for (const auto& [a, dim] : top->weight_dims) {
    if (!is_dominant(a) || dim == 0) continue;
    const Constituent* c = dec.find(strip_zeros(a));
    require(c != nullptr, ErrorKind::Internal, "dominant weight missing from the tensor decomposition");
    total += c->dimension * c->dimension;
  }
  return total;
}

}  // namespace

long dim_quotient_Id(int n, int d, long budget) { return dim_Id_tensor(decompose_tensor(n, d, budget)); }

long dim_quotient_Id(const Decomposition& dec) { return dim_Id_tensor(dec); }

long dim_quotient_Id_weyl(int n, int d) { return dim_Id_weyl(n, d, irrep_dim); }

WeightStatus weight_status(const HighestWeight& w, const HighestWeight& mu) {
  require(w.rank() == mu.rank(), ErrorKind::DimensionMismatch, "weights of different rank");
  const int n = w.rank();
  WeightStatus s;
  s.mu = mu;
  const RatVec diff = to_rational(IntVec(w.w - mu.w));
  const RatVec v = linalg::inverse(to_rational(cartan_matrix(n))) * diff;
  IntVec coords(n - 1);
  for (Index k = 0; k < v.size(); ++k) {
    if (boost::multiprecision::denominator(v(k)) != 1 || v(k) < 0) return s;
    coords(k) = static_cast<int>(boost::multiprecision::numerator(v(k)));
  }
  s.expressible = true;
  s.v = DimVec(coords);
  if (const auto a = try_a_of_vw(s.v, w)) s.multiplicity = weight_multiplicity(highest_weight_crystal(w), *a);
  return s;
}

std::vector<WeightStatus> dominant_weights_of(const HighestWeight& w) {
  return dominant_weights_in(w, highest_weight_crystal(w));
}

long dim_quotient_Jw(const HighestWeight& w) { return dim_Jw_crystal(w, irrep_dim); }

long dim_quotient_Jw_tensor(const HighestWeight& w, long budget) {
  return dim_Jw_from(w, decompose_tensor(w.rank(), w.degree(), budget));
}

long dim_quotient_Jw_tensor(const HighestWeight& w, const Decomposition& dec) {
  require(dec.n == w.rank() && dec.d == w.degree(), ErrorKind::Incompatible, "decomposition has the wrong n or d");
  return dim_Jw_from(w, dec);
}

long kostka(const Partition& lambda, const Composition& a) {
  require(lambda.size() == a.total(), ErrorKind::Incompatible, "shape and content have different sizes");
  for (int part : a.parts)
    if (part < 0) return 0;
  // Peel off the largest letter as a horizontal strip.
  std::function<long(const std::vector<int>&, std::size_t)> count = [&](const std::vector<int>& shape,
                                                                        std::size_t letters) -> long {
    if (letters == 0) return std::all_of(shape.begin(), shape.end(), [](int p) { return p == 0; }) ? 1 : 0;
    const int strip = a.parts[letters - 1];
    long total = 0;
    std::vector<int> inner = shape;
    std::function<void(std::size_t, int)> choose = [&](std::size_t row, int left) {
      if (row == shape.size()) {
        if (left == 0) total += count(inner, letters - 1);
        return;
      }
      const int floor = row + 1 < shape.size() ? shape[row + 1] : 0;
      for (int keep = shape[row]; keep >= floor && shape[row] - keep <= left; --keep) {
        inner[row] = keep;
        choose(row + 1, left - (shape[row] - keep));
      }
      inner[row] = shape[row];
    };
    choose(0, strip);
    return total;
  };
  return count(lambda.parts, a.parts.size());
}

namespace {

void check_margins(const Composition& d1, const Composition& d2) {
  require(d1.total() == d2.total(), ErrorKind::Incompatible, "row and column sums have different totals");
  for (int p : d1.parts) require(p >= 0, ErrorKind::Precondition, "negative margin");
  for (int p : d2.parts) require(p >= 0, ErrorKind::Precondition, "negative margin");
}

/// Calls visit on every matrix with the given margins, lexicographically by row-major entries.
void enumerate_margins(const Composition& d1, const Composition& d2, const std::function<void(const IntMatrix&)>& visit) {
  const std::size_t rows = d1.parts.size(), cols = d2.parts.size();
  IntMatrix m(rows, std::vector<int>(cols, 0));
  std::vector<int> col_left = d2.parts;
  std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t r, std::size_t c, int row_left) {
    if (r == rows) {
      if (std::all_of(col_left.begin(), col_left.end(), [](int x) { return x == 0; })) visit(m);
      return;
    }
    if (c + 1 == cols) {
      if (row_left > col_left[c]) return;
      m[r][c] = row_left;
      col_left[c] -= row_left;
      fill(r + 1, 0, r + 1 < rows ? d1.parts[r + 1] : 0);
      col_left[c] += row_left;
      m[r][c] = 0;
      return;
    }
    for (int x = 0; x <= std::min(row_left, col_left[c]); ++x) {
      m[r][c] = x;
      col_left[c] -= x;
      fill(r, c + 1, row_left - x);
      col_left[c] += x;
    }
    m[r][c] = 0;
  };
  if (rows == 0 || cols == 0) {
    if (d1.total() == 0) visit(m);
    return;
  }
  fill(0, 0, d1.parts[0]);
}

}  // namespace

long margin_matrix_count(const Composition& d1, const Composition& d2) {
  check_margins(d1, d2);
  // Row by row, memoised on the remaining column sums.
  std::map<std::pair<std::size_t, std::vector<int>>, long> memo;
  std::function<long(std::size_t, const std::vector<int>&)> rows_from = [&](std::size_t r,
                                                                          const std::vector<int>& left) -> long {
    if (r == d1.parts.size()) return std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }) ? 1 : 0;
    const auto key = std::make_pair(r, left);
    if (const auto it = memo.find(key); it != memo.end()) return it->second;
    long total = 0;
    std::vector<int> next = left;
    std::function<void(std::size_t, int)> place = [&](std::size_t c, int remaining) {
      if (c == left.size()) {
        if (remaining == 0) total += rows_from(r + 1, next);
        return;
      }
      for (int x = 0; x <= std::min(remaining, left[c]); ++x) {
        next[c] = left[c] - x;
        place(c + 1, remaining - x);
      }
      next[c] = left[c];
    };
    place(0, d1.parts[r]);
    memo[key] = total;
    return total;
  };
  return rows_from(0, d2.parts);
}

std::vector<IntMatrix> margin_matrices(const Composition& d1, const Composition& d2) {
  check_margins(d1, d2);
  std::vector<IntMatrix> out;
  enumerate_margins(d1, d2, [&](const IntMatrix& m) { out.push_back(m); });
  return out;
}

TableauPair rsk(const IntMatrix& m) {
  TableauPair out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      require(m[i][j] >= 0, ErrorKind::Precondition, "rsk needs a non-negative matrix");
      for (int copy = 0; copy < m[i][j]; ++copy) {
        int x = static_cast<int>(j) + 1;
        std::size_t row = 0;
        while (true) {
          if (row == out.P.size()) {
            out.P.push_back({x});
            out.Q.push_back({static_cast<int>(i) + 1});
            break;
          }
          auto& r = out.P[row];
          const auto it = std::upper_bound(r.begin(), r.end(), x);
          if (it == r.end()) {
            r.push_back(x);
            out.Q[row].push_back(static_cast<int>(i) + 1);
            break;
          }
          std::swap(*it, x);
          ++row;
        }
      }
    }
  }
  return out;
}

IntMatrix inverse_rsk(const TableauPair& pq, int rows, int cols) {
  require(pq.P.size() == pq.Q.size(), ErrorKind::DimensionMismatch, "P and Q have different shapes");
  for (std::size_t r = 0; r < pq.P.size(); ++r)
    require(pq.P[r].size() == pq.Q[r].size(), ErrorKind::DimensionMismatch, "P and Q have different shapes");
  Tableau P = pq.P, Q = pq.Q;
  IntMatrix m(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(cols), 0));
  while (!Q.empty()) {
    // The largest entry of Q was inserted last at its rightmost occurrence;
    // equal entries form a horizontal strip, so that cell ends the longest such row.
    int top = 0;
    for (const auto& r : Q) top = std::max(top, r.back());
    std::size_t row = Q.size();
    for (std::size_t r = 0; r < Q.size(); ++r)
      if (Q[r].back() == top && (row == Q.size() || Q[r].size() > Q[row].size())) row = r;
    const int i = Q[row].back();
    Q[row].pop_back();
    int x = P[row].back();
    P[row].pop_back();
    for (std::size_t up = row; up-- > 0;) {
      auto& r = P[up];
      auto it = std::lower_bound(r.begin(), r.end(), x);
      --it;  // largest entry strictly less than x
      std::swap(*it, x);
    }
    if (Q[row].empty()) {
      Q.erase(Q.begin() + static_cast<long>(row));
      P.erase(P.begin() + static_cast<long>(row));
    }
    require(i >= 1 && i <= rows && x >= 1 && x <= cols, ErrorKind::OutOfRange, "tableau entry outside the matrix");
    ++m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(x - 1)];
  }
  return m;
}

bool Sl3Report::passed() const {
  return std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.passed; });
}

Sl3Report verify_sl3_example(const IrrepDimFn& dim_fn, long budget) {
  Sl3Report report;
  const HighestWeight three_omega1{3, 0};
  const HighestWeight adjoint{1, 1};
  const Composition three_ones{3, 0, 0};

  report.facts.push_back({"partition_of", is_partition_of(three_omega1, 3), {{"degree", three_omega1.degree()}}});

  const Decomposition dec = decompose_tensor(3, 3, budget);
  const CrystalGraph adj = highest_weight_crystal(adjoint);
  const long crystal_mult = weight_multiplicity(adj, three_ones);
  const long kostka_mult = kostka(Partition{2, 1}, three_ones);
  const Constituent* adj_tensor = dec.find(Partition{2, 1});
  const long tensor_mult =
      adj_tensor != nullptr && adj_tensor->weight_dims.count(three_ones) ? adj_tensor->weight_dims.at(three_ones) : 0;
  const bool expressible = weight_status(adjoint, three_omega1).expressible;
  report.facts.push_back({"not_a_weight",
                          adj_tensor != nullptr && crystal_mult == 0 && kostka_mult == 0 && tensor_mult == 0,
                          {{"crystal", crystal_mult},
                           {"kostka", kostka_mult},
                           {"tensor", tensor_mult},
                           {"expressible", expressible ? 1 : 0}}});

  const long id_weyl = dim_Id_weyl(3, 3, dim_fn);
  const long id_tensor = dim_Id_tensor(dec);
  long id_margins = 0;
  for (const Composition& d1 : compositions(3, 3))
    for (const Composition& d2 : compositions(3, 3)) id_margins += margin_matrix_count(d1, d2);
  report.facts.push_back({"dim_Id",
                          id_weyl == 165 && id_tensor == 165 && id_margins == 165,
                          {{"weyl", id_weyl}, {"tensor", id_tensor}, {"margins", id_margins}}});

  const long jw_crystal = dim_Jw_crystal(adjoint, dim_fn);
  const long jw_tensor = dim_Jw_from(adjoint, dec);
  report.facts.push_back({"dim_Jw",
                          jw_crystal == 65 && jw_tensor == 65 && jw_crystal != id_weyl,
                          {{"crystal", jw_crystal}, {"tensor", jw_tensor}}});
  return report;
}

}  // namespace geocrystal
