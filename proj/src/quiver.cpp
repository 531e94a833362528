#include "geocrystal/quiver.hpp"

#include <algorithm>
#include <random>

namespace geocrystal {

using linalg::Index;

QuiverShape::QuiverShape(int rank_n) : n(rank_n) {
  require(n >= 2, ErrorKind::InvalidRank, "quiver needs n >= 2");
}

std::vector<QuiverEdge> QuiverShape::edges() const {
  std::vector<QuiverEdge> out;
  for (int k = 1; k + 1 <= n - 1; ++k) out.push_back({k, k + 1});
  for (int k = 2; k <= n - 1; ++k) out.push_back({k, k - 1});
  return out;
}

std::vector<QuiverEdge> QuiverShape::outgoing(int k) const {
  std::vector<QuiverEdge> out;
  if (k - 1 >= 1) out.push_back({k, k - 1});
  if (k + 1 <= n - 1) out.push_back({k, k + 1});
  return out;
}

std::vector<QuiverEdge> QuiverShape::incoming(int k) const {
  std::vector<QuiverEdge> out;
  if (k - 1 >= 1) out.push_back({k - 1, k});
  if (k + 1 <= n - 1) out.push_back({k + 1, k});
  return out;
}

QuiverRep::QuiverRep(DimVec v, HighestWeight w) : v_(std::move(v)), w_(std::move(w)) {
  require(v_.rank() == w_.rank(), ErrorKind::DimensionMismatch, "v and w have different ranks");
  const int n = w_.rank();
  for (int k = 1; k + 1 <= n - 1; ++k) up_.push_back(RatMat::Zero(v_[k + 1], v_[k]));
  for (int k = 2; k <= n - 1; ++k) down_.push_back(RatMat::Zero(v_[k - 1], v_[k]));
  for (int k = 1; k <= n - 1; ++k) {
    i_.push_back(RatMat::Zero(v_[k], w_[k]));
    j_.push_back(RatMat::Zero(w_[k], v_[k]));
  }
}

std::size_t QuiverRep::edge_slot(int from, int to) const {
  const int n = this->n();
  require(from >= 1 && from <= n - 1 && to >= 1 && to <= n - 1 && (to - from == 1 || from - to == 1),
          ErrorKind::OutOfRange, "no edge " + std::to_string(from) + "->" + std::to_string(to));
  return to == from + 1 ? static_cast<std::size_t>(from - 1) : static_cast<std::size_t>(from - 2);
}

const RatMat& QuiverRep::B(int from, int to) const {
  const std::size_t slot = edge_slot(from, to);
  return to == from + 1 ? up_[slot] : down_[slot];
}

RatMat& QuiverRep::B(int from, int to) {
  const std::size_t slot = edge_slot(from, to);
  return to == from + 1 ? up_[slot] : down_[slot];
}

void QuiverRep::validate() const {
  const auto shape_ok = [](const RatMat& m, int rows, int cols) { return m.rows() == rows && m.cols() == cols; };
  for (const QuiverEdge& e : shape().edges())
    require(shape_ok(B(e.from, e.to), v_[e.to], v_[e.from]), ErrorKind::DimensionMismatch,
            "B:" + std::to_string(e.from) + "->" + std::to_string(e.to) + " has the wrong shape");
  for (int k = 1; k < n(); ++k) {
    require(shape_ok(i(k), v_[k], w_[k]), ErrorKind::DimensionMismatch, "i:" + std::to_string(k) + " has the wrong shape");
    require(shape_ok(j(k), w_[k], v_[k]), ErrorKind::DimensionMismatch, "j:" + std::to_string(k) + " has the wrong shape");
  }
}

bool operator==(const QuiverRep& a, const QuiverRep& b) {
  if (!(a.v_ == b.v_) || !(a.w_ == b.w_)) return false;
  const auto same = [](const std::vector<RatMat>& x, const std::vector<RatMat>& y) {
    for (std::size_t t = 0; t < x.size(); ++t)
      if (!exactly_equal(x[t], y[t])) return false;
    return true;
  };
  return same(a.up_, b.up_) && same(a.down_, b.down_) && same(a.i_, b.i_) && same(a.j_, b.j_);
}

std::vector<RatMat> moment_map(const QuiverRep& r) {
  std::vector<RatMat> mu;
  const QuiverShape shape = r.shape();
  for (int k = 1; k < r.n(); ++k) {
    RatMat m = r.i(k) * r.j(k);
    for (const QuiverEdge& h : shape.incoming(k)) {
      const RatMat term = r.B(h.from, h.to) * r.B(h.to, h.from);
      if (h.sign() > 0)
        m += term;
      else
        m -= term;
    }
    mu.push_back(std::move(m));
  }
  return mu;
}

bool moment_map_vanishes(const QuiverRep& r) {
  for (const RatMat& m : moment_map(r))
    if (!is_zero(m)) return false;
  return true;
}

namespace {

GradedSubspace full_graded(const QuiverRep& r) {
  GradedSubspace out;
  for (int k = 1; k < r.n(); ++k) out.push_back(RatSubspace::full(r.v()[k]));
  return out;
}

RatSubspace& at(GradedSubspace& s, int k) { return s[static_cast<std::size_t>(k - 1)]; }
const RatSubspace& at(const GradedSubspace& s, int k) { return s[static_cast<std::size_t>(k - 1)]; }

}  // namespace

bool is_nilpotent_B(const QuiverRep& r) {
  const QuiverShape shape = r.shape();
  GradedSubspace current = full_graded(r);
  while (true) {
    bool all_zero = true;
    for (const RatSubspace& s : current) all_zero = all_zero && s.is_zero();
    if (all_zero) return true;
    GradedSubspace next;
    for (int l = 1; l < r.n(); ++l) {
      RatSubspace s = RatSubspace::zero(r.v()[l]);
      for (const QuiverEdge& h : shape.incoming(l))
        s = linalg::sum(s, linalg::apply(r.B(h.from, h.to), at(current, h.from)));
      next.push_back(std::move(s));
    }
    if (next == current) return false;
    current = std::move(next);
  }
}

GradedSubspace stable_closure(const QuiverRep& r) {
  const QuiverShape shape = r.shape();
  GradedSubspace s;
  for (int k = 1; k < r.n(); ++k) s.push_back(linalg::image(r.i(k)));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const QuiverEdge& h : shape.edges()) {
      RatSubspace& target = at(s, h.to);
      RatSubspace grown = linalg::sum(target, linalg::apply(r.B(h.from, h.to), at(s, h.from)));
      if (grown.dim() > target.dim()) {
        target = std::move(grown);
        grew = true;
      }
    }
  }
  return s;
}

bool is_stable(const QuiverRep& r) {
  for (const RatSubspace& s : stable_closure(r))
    if (!s.is_full()) return false;
  return true;
}

std::optional<std::string> lambda_violation(const QuiverRep& r) {
  for (int k = 1; k < r.n(); ++k)
    if (!is_zero(r.j(k))) return "j nonzero";
  if (!moment_map_vanishes(r)) return "moment map nonzero";
  if (!is_nilpotent_B(r)) return "B not nilpotent";
  return std::nullopt;
}

bool in_Lambda(const QuiverRep& r) { return !lambda_violation(r).has_value(); }

RatSubspace joint_kernel(const QuiverRep& r, int k) {
  require(k >= 1 && k < r.n(), ErrorKind::OutOfRange, "vertex out of range");
  const auto out = r.shape().outgoing(k);
  Index rows = 0;
  for (const QuiverEdge& h : out) rows += r.v()[h.to];
  RatMat stacked(rows, r.v()[k]);
  Index row = 0;
  for (const QuiverEdge& h : out) {
    stacked.middleRows(row, r.v()[h.to]) = r.B(h.from, h.to);
    row += r.v()[h.to];
  }
  return linalg::kernel(stacked);
}

int epsilon_k_point(const QuiverRep& r, int k) { return static_cast<int>(joint_kernel(r, k).dim()); }

DimAndSign dim_and_sign(const DimVec& v, const HighestWeight& w, int k) {
  require(v.rank() == w.rank(), ErrorKind::DimensionMismatch, "v and w have different ranks");
  require(k >= 1 && k < w.rank(), ErrorKind::OutOfRange, "vertex out of range");
  const IntMat c = cartan_matrix(w.rank());
  const IntVec twice_w_minus_cv = 2 * w.w - c * v.v;
  const IntVec w_minus_cv = w.w - c * v.v;
  return {static_cast<long>(v.v.dot(twice_w_minus_cv)), -static_cast<long>(w_minus_cv(k - 1)) - 1};
}

namespace {

/// Projection V -> V/S in the coordinates complementary to the echelon pivots.
struct QuotientChart {
  RatMat project;  // (v - s) x v
  RatMat section;  // v x (v - s)
};

QuotientChart chart_for(const RatSubspace& s) {
  const Index v = s.ambient_dim();
  std::vector<bool> pivot(static_cast<std::size_t>(v), false);
  for (Index p : s.pivots()) pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index t = 0; t < v; ++t)
    if (!pivot[static_cast<std::size_t>(t)]) free.push_back(t);
  RatMat residual = RatMat::Identity(v, v);
  for (Index j = 0; j < s.dim(); ++j) residual.row(s.pivots()[static_cast<std::size_t>(j)]).setZero();
  for (Index j = 0; j < s.dim(); ++j) {
    const Index p = s.pivots()[static_cast<std::size_t>(j)];
    // residual(u) = u - sum_j u_p b_j
    for (Index row = 0; row < v; ++row)
      if (!pivot[static_cast<std::size_t>(row)]) residual(row, p) -= s.basis()(row, j);
  }
  RatMat section = linalg::coordinate_inclusion<Rational>(free, v);
  RatMat project = section.transpose() * residual;
  return {std::move(project), std::move(section)};
}

}  // namespace

QuiverRep quotient_by_invariant_subspace(const QuiverRep& r, const GradedSubspace& S) {
  const int n = r.n();
  require(static_cast<int>(S.size()) == n - 1, ErrorKind::DimensionMismatch, "graded subspace needs one space per vertex");
  IntVec dims(n - 1);
  for (int k = 1; k < n; ++k) {
    require(at(S, k).ambient_dim() == r.v()[k], ErrorKind::DimensionMismatch, "S_k does not live in V_k");
    dims(k - 1) = r.v()[k] - static_cast<int>(at(S, k).dim());
    require(is_zero(RatMat(r.j(k) * at(S, k).basis())), ErrorKind::Precondition,
            "S is not contained in the kernel of j");
  }
  for (const QuiverEdge& h : r.shape().edges())
    require(at(S, h.to).contains(linalg::apply(r.B(h.from, h.to), at(S, h.from))), ErrorKind::Precondition,
            "S is not B-invariant along " + std::to_string(h.from) + "->" + std::to_string(h.to));

  std::vector<QuotientChart> charts;
  for (const RatSubspace& s : S) charts.push_back(chart_for(s));
  const auto chart = [&](int k) -> const QuotientChart& { return charts[static_cast<std::size_t>(k - 1)]; };

  QuiverRep out(DimVec(dims), r.w());
  for (const QuiverEdge& h : r.shape().edges())
    out.B(h.from, h.to) = chart(h.to).project * r.B(h.from, h.to) * chart(h.from).section;
  for (int k = 1; k < n; ++k) {
    out.i(k) = chart(k).project * r.i(k);
    out.j(k) = r.j(k) * chart(k).section;
  }
  return out;
}

QuiverReduction kashiwara_reduce(const QuiverRep& r, int k) {
  if (auto why = lambda_violation(r)) throw Error(ErrorKind::Precondition, "point not in Lambda: " + *why);
  require(is_stable(r), ErrorKind::Precondition, "point is not stable");
  RatSubspace kernel = joint_kernel(r, k);
  const int c = static_cast<int>(kernel.dim());
  if (c == 0) return {r, 0};
  GradedSubspace S;
  for (int l = 1; l < r.n(); ++l) S.push_back(l == k ? kernel : RatSubspace::zero(r.v()[l]));
  return {quotient_by_invariant_subspace(r, S), c};
}

QuiverRep gauge_transform(const QuiverRep& r, const std::vector<RatMat>& g) {
  require(static_cast<int>(g.size()) == r.n() - 1, ErrorKind::DimensionMismatch, "one gauge matrix per vertex");
  std::vector<RatMat> g_inv;
  for (int k = 1; k < r.n(); ++k) {
    const RatMat& gk = g[static_cast<std::size_t>(k - 1)];
    require(gk.rows() == r.v()[k] && gk.cols() == r.v()[k], ErrorKind::DimensionMismatch, "gauge matrix has the wrong size");
    g_inv.push_back(linalg::inverse(gk));
  }
  QuiverRep out = r;
  for (const QuiverEdge& h : r.shape().edges())
    out.B(h.from, h.to) = g[static_cast<std::size_t>(h.to - 1)] * r.B(h.from, h.to) * g_inv[static_cast<std::size_t>(h.from - 1)];
  for (int k = 1; k < r.n(); ++k) {
    out.i(k) = g[static_cast<std::size_t>(k - 1)] * r.i(k);
    out.j(k) = r.j(k) * g_inv[static_cast<std::size_t>(k - 1)];
  }
  return out;
}

namespace {

using Rng = std::mt19937_64;

int draw(Rng& rng, int bound) { return std::uniform_int_distribution<int>(-bound, bound)(rng); }

RatMat random_dense(Rng& rng, Index rows, Index cols, int bound) {
  RatMat m(rows, cols);
  for (Index c = 0; c < cols; ++c)
    for (Index r = 0; r < rows; ++r) m(r, c) = Rational(draw(rng, bound));
  return m;
}

/// Zero, rank one, or dense with equal odds.
RatMat random_map(Rng& rng, Index rows, Index cols, int bound) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0: return RatMat::Zero(rows, cols);
    case 1: return random_dense(rng, rows, 1, bound) * random_dense(rng, 1, cols, bound);
    default: return random_dense(rng, rows, cols, bound);
  }
}

/// Scales a rational vector to a primitive-ish integer vector.
RatVec clear_denominators(RatVec x) {
  Integer lcm = 1;
  for (Index t = 0; t < x.size(); ++t) {
    const Integer den = boost::multiprecision::denominator(x(t));
    lcm = boost::multiprecision::lcm(lcm, den);
  }
  return x * Rational(lcm);
}

std::vector<QuiverEdge> oriented_edges(const QuiverShape& shape, bool omega) {
  std::vector<QuiverEdge> out;
  for (const QuiverEdge& e : shape.edges())
    if (e.in_omega() == omega) out.push_back(e);
  return out;
}

}  // namespace

RatMat moment_map_linear_system(const QuiverRep& fixed, bool solve_for_omega) {
  const std::vector<QuiverEdge> unknown = oriented_edges(fixed.shape(), solve_for_omega);
  QuiverRep base = fixed;
  for (const QuiverEdge& e : unknown) base.B(e.from, e.to).setZero();
  const auto flatten = [](const std::vector<RatMat>& mats) {
    Index total = 0;
    for (const RatMat& m : mats) total += m.size();
    RatVec out(total);
    Index t = 0;
    for (const RatMat& m : mats)
      for (Index c = 0; c < m.cols(); ++c)
        for (Index r = 0; r < m.rows(); ++r) out(t++) = m(r, c);
    return out;
  };
  const RatVec offset = flatten(moment_map(base));
  std::vector<RatVec> columns;
  for (const QuiverEdge& e : unknown) {
    const RatMat& m = base.B(e.from, e.to);
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) {
        QuiverRep probe = base;
        probe.B(e.from, e.to)(r, c) = Rational(1);
        columns.push_back(flatten(moment_map(probe)) - offset);
      }
  }
  RatMat system(offset.size(), static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) system.col(static_cast<Index>(c)) = columns[c];
  return system;
}

std::vector<RatMat> random_gauge(const DimVec& v, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<RatMat> g;
  for (int k = 1; k < v.rank(); ++k) {
    RatMat m;
    do {
      m = random_dense(rng, v[k], v[k], 2);
    } while (linalg::rank(m) < v[k]);
    g.push_back(std::move(m));
  }
  return g;
}

namespace {

/// Adjoins a vector at vertex k killed by every outgoing map; the new rows of
/// the incoming maps satisfy beta_+ B(k,k+1) = beta_- B(k,k-1), which keeps mu = 0.
QuiverRep extend_at(const QuiverRep& r, int k, Rng& rng, int bound) {
  IntVec grown = r.v().v;
  ++grown(k - 1);
  QuiverRep out(DimVec(grown), r.w());
  const QuiverShape shape = r.shape();
  for (const QuiverEdge& e : shape.edges()) {
    const RatMat& b = r.B(e.from, e.to);
    out.B(e.from, e.to).topLeftCorner(b.rows(), b.cols()) = b;
  }
  for (int l = 1; l < r.n(); ++l) out.i(l).topRows(r.v()[l]) = r.i(l);
  const auto in = shape.incoming(k);
  Index unknowns = 0;
  for (const QuiverEdge& h : in) unknowns += r.v()[h.from];
  RatMat system(r.v()[k], unknowns);
  Index col = 0;
  for (const QuiverEdge& h : in) {
    const RatMat back = r.B(h.to, h.from).transpose();
    system.middleCols(col, r.v()[h.from]) = h.sign() > 0 ? back : RatMat(-back);
    col += r.v()[h.from];
  }
  const RatSubspace rows = linalg::kernel(system);
  RatVec coeffs(rows.dim());
  for (Index t = 0; t < coeffs.size(); ++t) coeffs(t) = Rational(draw(rng, bound));
  const RatVec beta = clear_denominators(rows.basis() * coeffs);
  col = 0;
  for (const QuiverEdge& h : in) {
    out.B(h.from, h.to).row(r.v()[k]) = beta.segment(col, r.v()[h.from]).transpose();
    col += r.v()[h.from];
  }
  out.i(k).row(r.v()[k]) = random_dense(rng, 1, r.w()[k], bound);
  return out;
}

/// Builds a point one basis vector at a time; std::nullopt when every vertex fails.
std::optional<QuiverRep> grow_point(const DimVec& v, const HighestWeight& w, Rng& rng, int bound) {
  QuiverRep r(DimVec::zero(w.rank()), w);
  while (!(r.v() == v)) {
    std::vector<int> candidates;
    for (int k = 1; k < w.rank(); ++k)
      if (r.v()[k] < v[k]) candidates.push_back(k);
    std::shuffle(candidates.begin(), candidates.end(), rng);
    bool grown = false;
    for (int k : candidates) {
      for (int tries = 0; tries < 3 && !grown; ++tries) {
        QuiverRep next = extend_at(r, k, rng, bound);
        if (is_stable(next)) {
          r = std::move(next);
          grown = true;
        }
      }
      if (grown) break;
    }
    if (!grown) return std::nullopt;
  }
  return r;
}

}  // namespace

QuiverRep sample_lambda_point(const DimVec& v, const HighestWeight& w, std::uint64_t seed,
                              const SamplerOptions& options) {
  Rng rng(seed);
  const QuiverShape shape(w.rank());
  const int b = options.entry_bound;
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    if (attempt % 2 == 1) {
      if (auto grown = grow_point(v, w, rng, b); grown && in_Lambda(*grown)) return *grown;
      continue;
    }
    QuiverRep r(v, w);
    for (int k = 1; k < w.rank(); ++k) r.i(k) = random_map(rng, v[k], w[k], b);
    // Draw one orientation, then solve mu = 0 (linear once j = 0) for the other;
    // half of these attempts leave the solved side at zero. Odd attempts grow
    // the point one basis vector at a time instead.
    const bool draw_omega = (attempt % 4) == 0;
    for (const QuiverEdge& e : oriented_edges(shape, draw_omega))
      r.B(e.from, e.to) = random_map(rng, v[e.to], v[e.from], b);
    if (attempt % 8 < 4) {
      const RatMat system = moment_map_linear_system(r, !draw_omega);
      const RatSubspace solutions = linalg::kernel(system);
      RatVec coeffs(solutions.dim());
      for (Index t = 0; t < coeffs.size(); ++t) coeffs(t) = Rational(draw(rng, b));
      const RatVec x = clear_denominators(solutions.basis() * coeffs);
      Index t = 0;
      for (const QuiverEdge& e : oriented_edges(shape, !draw_omega)) {
        RatMat& m = r.B(e.from, e.to);
        for (Index c = 0; c < m.cols(); ++c)
          for (Index row = 0; row < m.rows(); ++row) m(row, c) = x(t++);
      }
    }
    if (in_Lambda(r) && is_stable(r)) return r;
  }
  throw Error(ErrorKind::Exhausted, "no stable Lambda point found after " + std::to_string(options.max_attempts) +
                                        " attempts (the weight space may be empty)");
}

}  // namespace geocrystal
