#include "geocrystal/maffei.hpp"

#include <algorithm>
#include <random>

namespace geocrystal {

using linalg::Index;

std::vector<LeftRightPath> enum_paths(int n) {
  require(n >= 2, ErrorKind::InvalidRank, "paths need n >= 2");
  std::vector<LeftRightPath> out;
  for (int s = 1; s <= n - 1; ++s)
    for (int l = 1; l <= s; ++l)
      for (int m = l; m <= n - 1; ++m) out.push_back({s, l, m});
  return out;
}

RatMat path_matrix(const QuiverRep& r, const LeftRightPath& p) {
  require(p.bottom >= 1 && p.bottom <= std::min(p.start, p.end) && std::max(p.start, p.end) < r.n(),
          ErrorKind::OutOfRange, "path does not fit the quiver");
  RatMat m = RatMat::Identity(r.v()[p.start], r.v()[p.start]);
  for (int k = p.start; k > p.bottom; --k) m = r.B(k, k - 1) * m;
  for (int k = p.bottom; k < p.end; ++k) m = r.B(k, k + 1) * m;
  return m;
}

ThetaContext::ThetaContext(HighestWeight w) : w_(std::move(w)), shift_(block_shift_x(w_)) {
  const int n = w_.rank();
  for (int k = 0; k <= n; ++k) {
    std::vector<Index> coords;
    for (Index c = 0; c < d(); ++c) {
      const CopyLabel& label = shift_.basis[static_cast<std::size_t>(c)];
      if (label.copy <= std::min(label.vertex, k)) coords.push_back(c);
    }
    prefix_.push_back(std::move(coords));
  }
}

Index ThetaContext::copy_offset(int vertex, int copy) const {
  const auto it = std::find(shift_.basis.begin(), shift_.basis.end(), CopyLabel{vertex, copy, 0});
  require(it != shift_.basis.end(), ErrorKind::OutOfRange,
          "no copy W_" + std::to_string(vertex) + "^(" + std::to_string(copy) + ")");
  return static_cast<Index>(it - shift_.basis.begin());
}

Index ThetaContext::prefix_position(int k, Index coordinate) const {
  const auto& coords = prefix(k);
  const auto it = std::lower_bound(coords.begin(), coords.end(), coordinate);
  require(it != coords.end() && *it == coordinate, ErrorKind::OutOfRange, "coordinate outside W^{<=k}");
  return static_cast<Index>(it - coords.begin());
}

namespace {

void check_context(const QuiverRep& r, const ThetaContext& ctx) {
  require(r.w() == ctx.w(), ErrorKind::DimensionMismatch, "point and context have different w");
}

}  // namespace

RatMat phi_k(const QuiverRep& r, const ThetaContext& ctx, int k) {
  check_context(r, ctx);
  require(k >= 1 && k < r.n(), ErrorKind::OutOfRange, "phi_k needs 1 <= k <= n-1");
  for (int l = 1; l < r.n(); ++l)
    require(is_zero(r.j(l)), ErrorKind::Precondition, "phi_k requires j = 0");
  RatMat phi = RatMat::Zero(r.v()[k], static_cast<Index>(ctx.prefix(k).size()));
  for (const LeftRightPath& p : enum_paths(r.n())) {
    if (p.inc() != k) continue;
    const int s = p.out();
    if (r.w()[s] == 0) continue;
    const Index col = ctx.prefix_position(k, ctx.copy_offset(s, s - p.ord()));
    phi.middleCols(col, r.w()[s]) += path_matrix(r, p) * r.i(s);
  }
  return phi;
}

Flag theta(const QuiverRep& r, const ThetaContext& ctx) {
  check_context(r, ctx);
  if (auto why = lambda_violation(r)) throw Error(ErrorKind::Precondition, "in_Lambda: " + *why);
  require(is_stable(r), ErrorKind::Precondition, "stability: im i does not generate V");
  std::vector<RatSubspace> spaces{RatSubspace::zero(ctx.d())};
  for (int k = 1; k < r.n(); ++k)
    spaces.push_back(linalg::embed(linalg::kernel(phi_k(r, ctx, k)), ctx.prefix(k), ctx.d()));
  spaces.push_back(RatSubspace::full(ctx.d()));
  return Flag(std::move(spaces));
}

SpecialTheta theta_w1_special(const QuiverRep& r) {
  for (int k = 2; k < r.n(); ++k)
    require(r.w()[k] == 0, ErrorKind::Precondition, "W must be concentrated at vertex 1");
  const int c = r.w()[1];
  RatMat x = r.j(1) * r.i(1);
  std::vector<RatSubspace> spaces{RatSubspace::zero(c)};
  RatMat chain = r.i(1);
  for (int l = 1; l < r.n(); ++l) {
    if (l > 1) chain = r.B(l - 1, l) * chain;
    spaces.push_back(linalg::kernel(chain));
  }
  spaces.push_back(RatSubspace::full(c));
  return {std::move(x), Flag(std::move(spaces))};
}

namespace {

/// Submatrix of x with rows in `rows` and columns in `cols`.
RatMat restrict_x(const ThetaContext& ctx, const std::vector<Index>& rows, const std::vector<Index>& cols) {
  RatMat out(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      out(static_cast<Index>(a), static_cast<Index>(b)) = ctx.x().matrix()(rows[a], cols[b]);
  return out;
}

/// Inclusion W^{<=k} -> W^{<=k+1} in prefix coordinates.
RatMat prefix_inclusion(const ThetaContext& ctx, int k) {
  const auto& small = ctx.prefix(k);
  RatMat out = RatMat::Zero(static_cast<Index>(ctx.prefix(k + 1).size()), static_cast<Index>(small.size()));
  for (std::size_t b = 0; b < small.size(); ++b) out(ctx.prefix_position(k + 1, small[b]), static_cast<Index>(b)) = 1;
  return out;
}

}  // namespace

bool check_comm1(const QuiverRep& r, const ThetaContext& ctx) {
  for (int k = 2; k < r.n(); ++k) {
    // x carries W^{<=k} into W^{<=k-1}; anything leaking outside fails the identity.
    const RatMat x_full = restrict_x(ctx, ctx.prefix(r.n()), ctx.prefix(k));
    const RatMat x_sub = restrict_x(ctx, ctx.prefix(k - 1), ctx.prefix(k));
    RatMat leak = x_full;
    for (Index c : ctx.prefix(k - 1)) leak.row(ctx.prefix_position(r.n(), c)).setZero();
    if (!is_zero(leak)) return false;
    if (!exactly_equal(RatMat(r.B(k, k - 1) * phi_k(r, ctx, k)), RatMat(phi_k(r, ctx, k - 1) * x_sub)))
      return false;
  }
  // k = 1: x(W^{<=1}) = 0 since only first copies lie in W^{<=1}.
  return is_zero(restrict_x(ctx, ctx.prefix(r.n()), ctx.prefix(1)));
}

bool check_comm2(const QuiverRep& r, const ThetaContext& ctx) {
  for (int k = 1; k + 1 < r.n(); ++k) {
    if (!exactly_equal(RatMat(r.B(k, k + 1) * phi_k(r, ctx, k)),
                       RatMat(phi_k(r, ctx, k + 1) * prefix_inclusion(ctx, k))))
      return false;
  }
  return true;
}

bool check_flag_subspace(const QuiverRep& r, const ThetaContext& ctx) {
  const Flag flag = theta(r, ctx);
  for (int k = 1; k < r.n(); ++k) {
    const RatSubspace lhs =
        linalg::embed(linalg::preimage(phi_k(r, ctx, k), joint_kernel(r, k)), ctx.prefix(k), ctx.d());
    const RatSubspace rhs = linalg::intersect(linalg::preimage(ctx.x().matrix(), flag[k - 1]), flag[k + 1]);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool check_composition(const QuiverRep& r, const ThetaContext& ctx) {
  const auto a = try_a_of_vw(r.v(), r.w());
  return a.has_value() && composition_of(theta(r, ctx)) == *a;
}

bool check_membership(const QuiverRep& r, const ThetaContext& ctx) {
  return flag_membership(ctx.x(), theta(r, ctx));
}

bool check_surjectivity(const QuiverRep& r, const ThetaContext& ctx) {
  for (int k = 1; k < r.n(); ++k)
    if (linalg::rank(phi_k(r, ctx, k)) != r.v()[k]) return false;
  return true;
}

bool check_epsilon_agreement(const QuiverRep& r, const ThetaContext& ctx) {
  const Flag flag = theta(r, ctx);
  for (int k = 1; k < r.n(); ++k)
    if (epsilon_k_point(r, k) != epsilon_k_flag(flag, ctx.x(), k)) return false;
  return true;
}

bool check_reduction_intertwining(const QuiverRep& r, const ThetaContext& ctx) {
  const Flag flag = theta(r, ctx);
  for (int k = 1; k < r.n(); ++k) {
    const QuiverReduction reduced = kashiwara_reduce(r, k);
    const FlagReduction expected = flag_reduce(flag, ctx.x(), k);
    if (reduced.c != expected.c || !(theta(reduced.point, ctx) == expected.flag)) return false;
  }
  return true;
}

bool check_gauge_invariance(const QuiverRep& r, const ThetaContext& ctx, std::uint64_t seed) {
  return theta(gauge_transform(r, random_gauge(r.v(), seed)), ctx) == theta(r, ctx);
}

bool check_jordan_dominance(const QuiverRep& r, const ThetaContext& ctx) {
  const Flag flag = theta(r, ctx);
  if (!flag_membership(ctx.x(), flag)) return false;
  return dominates(jordan_type(composition_of(flag)), jordan_type_of(ctx.x().matrix()));
}

int check_hecke(const QuiverRep& r, const ThetaContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const Flag flag = theta(r, ctx);
  const Composition a = composition_of(flag);
  int checked = 0;
  for (int k = 1; k < r.n(); ++k) {
    const RatSubspace kernel = joint_kernel(r, k);
    if (kernel.is_zero()) continue;
    RatVec line;
    do {
      RatVec c(kernel.dim());
      for (Index t = 0; t < c.size(); ++t) c(t) = coeff(rng);
      line = kernel.basis() * c;
    } while (is_zero(line));
    GradedSubspace S;
    for (int l = 1; l < r.n(); ++l) S.push_back(l == k ? RatSubspace::span(line) : RatSubspace::zero(r.v()[l]));
    const Flag grown = theta(quotient_by_invariant_subspace(r, S), ctx);
    const auto a_plus = comp_shift(a, k, Shift::Plus);
    if (!a_plus || !is_hecke_pair(grown, flag, k) || !(composition_of(grown) == *a_plus)) return -1;
    ++checked;
  }
  return checked;
}

std::vector<CheckResult> theta_checks(const QuiverRep& r, const ThetaContext& ctx) {
  const auto run = [&](const std::string& name, auto&& fn) -> CheckResult {
    try {
      return {name, fn(), ""};
    } catch (const Error& e) {
      return {name, false, e.what()};
    }
  };
  return {
      run("comm1", [&] { return check_comm1(r, ctx); }),
      run("comm2", [&] { return check_comm2(r, ctx); }),
      run("flag_subspace", [&] { return check_flag_subspace(r, ctx); }),
      run("lang_isom", [&] { return check_composition(r, ctx) && check_membership(r, ctx); }),
      run("surjectivity", [&] { return check_surjectivity(r, ctx); }),
      run("epsilon_agreement", [&] { return check_epsilon_agreement(r, ctx); }),
      run("reduction_intertwining", [&] { return check_reduction_intertwining(r, ctx); }),
  };
}

}  // namespace geocrystal
