#include "geocrystal/flag.hpp"

#include <algorithm>
#include <string>

namespace geocrystal {

using linalg::Index;

NilEndo NilEndo::certify(RatMat x, int n) {
  require(x.rows() == x.cols(), ErrorKind::DimensionMismatch, "nilpotent endomorphism must be square");
  require(n >= 1, ErrorKind::InvalidRank, "nilpotency bound must be positive");
  RatMat power = RatMat::Identity(x.rows(), x.cols());
  int degree = 0;
  while (!is_zero(power)) {
    if (degree == std::max<int>(n, static_cast<int>(x.rows()))) break;
    power = power * x;
    ++degree;
  }
  require(is_zero(power) && degree <= n, ErrorKind::Precondition,
          "matrix does not satisfy x^" + std::to_string(n) + " = 0");
  return NilEndo(std::move(x), n, degree);
}

NilEndo jordan_nilpotent(const Partition& lambda, int d, int n) {
  require(lambda.size() == d, ErrorKind::DimensionMismatch,
          "partition of " + std::to_string(lambda.size()) + " used for d = " + std::to_string(d));
  RatMat x = RatMat::Zero(d, d);
  Index start = 0;
  for (int part : lambda.parts) {
    for (Index i = 0; i + 1 < part; ++i) x(start + i, start + i + 1) = Rational(1);
    start += part;
  }
  const int bound = n > 0 ? n : std::max(1, lambda.empty() ? 1 : lambda.parts.front());
  return NilEndo::certify(std::move(x), bound);
}

Partition jordan_type_of(const RatMat& x) {
  require(x.rows() == x.cols(), ErrorKind::DimensionMismatch, "Jordan type of a non-square matrix");
  const Index d = x.rows();
  // at_least[i] = number of blocks of size >= i = rank(x^{i-1}) - rank(x^i)
  std::vector<Index> ranks{d};
  RatMat power = RatMat::Identity(d, d);
  while (ranks.back() > 0) {
    power = power * x;
    const Index r = linalg::rank(power);
    require(r < ranks.back(), ErrorKind::Precondition, "matrix is not nilpotent");
    ranks.push_back(r);
  }
  std::vector<int> parts;
  for (std::size_t size = ranks.size() - 1; size >= 1; --size) {
    const Index at_least = ranks[size - 1] - ranks[size];
    const Index longer = size + 1 < ranks.size() ? ranks[size] - ranks[size + 1] : 0;
    for (Index c = 0; c < at_least - longer; ++c) parts.push_back(static_cast<int>(size));
  }
  return Partition(parts);
}

BlockShift block_shift_x(const HighestWeight& w) {
  std::vector<CopyLabel> basis;
  for (int k = 1; k < w.rank(); ++k)
    for (int m = 1; m <= k; ++m)
      for (int i = 0; i < w[k]; ++i) basis.push_back({k, m, i});
  const Index d = static_cast<Index>(basis.size());
  RatMat x = RatMat::Zero(d, d);
  for (Index col = 0; col < d; ++col) {
    const CopyLabel& src = basis[static_cast<std::size_t>(col)];
    if (src.copy == 1) continue;
    const CopyLabel target{src.vertex, src.copy - 1, src.index};
    const auto it = std::find(basis.begin(), basis.end(), target);
    x(static_cast<Index>(it - basis.begin()), col) = Rational(1);
  }
  return {NilEndo::certify(std::move(x), w.rank()), std::move(basis)};
}

Flag::Flag(std::vector<RatSubspace> spaces) : spaces_(std::move(spaces)) {
  require(spaces_.size() >= 2, ErrorKind::InvalidRank, "a flag needs F_0 and F_n");
  const Index d = spaces_.front().ambient_dim();
  for (const auto& s : spaces_)
    require(s.ambient_dim() == d, ErrorKind::DimensionMismatch, "flag steps live in different spaces");
  require(spaces_.front().is_zero(), ErrorKind::Precondition, "F_0 must be zero");
  require(spaces_.back().is_full(), ErrorKind::Precondition, "F_n must be the whole space");
  for (std::size_t i = 1; i < spaces_.size(); ++i)
    require(spaces_[i].contains(spaces_[i - 1]), ErrorKind::Precondition,
            "F_" + std::to_string(i - 1) + " is not contained in F_" + std::to_string(i));
}

Flag Flag::with_step(int k, RatSubspace replacement) const {
  std::vector<RatSubspace> spaces = spaces_;
  spaces.at(static_cast<std::size_t>(k)) = std::move(replacement);
  return Flag(std::move(spaces));
}

namespace {

void check_pair(const NilEndo& x, const Flag& flag) {
  require(x.dim() == flag.d(), ErrorKind::DimensionMismatch, "endomorphism and flag have different d");
}

void check_step(const Flag& flag, int k) {
  require(k >= 1 && k <= flag.n() - 1, ErrorKind::OutOfRange,
          "step " + std::to_string(k) + " outside 1.." + std::to_string(flag.n() - 1));
}

}  // namespace

bool flag_membership(const NilEndo& x, const Flag& flag) {
  check_pair(x, flag);
  for (int i = 1; i <= flag.n(); ++i) {
    if (!flag[i - 1].contains(linalg::apply(x.matrix(), flag[i]))) return false;
  }
  return true;
}

Composition composition_of(const Flag& flag) {
  std::vector<int> parts;
  for (int i = 1; i <= flag.n(); ++i) parts.push_back(static_cast<int>(flag[i].dim() - flag[i - 1].dim()));
  return Composition(parts);
}

long flag_dim(const Composition& d) {
  long total = 0;
  long prefix = 0;
  for (int part : d.parts) {
    total += prefix * part;
    prefix += part;
  }
  return total;
}

int s_k_exponent(const Composition& d, int k) {
  const auto grown = comp_shift(d, k, Shift::Plus);
  require(grown.has_value(), ErrorKind::Ghost, "d_k^+ is the ghost composition");
  return static_cast<int>(flag_dim(*grown) - flag_dim(d));
}

bool is_hecke_pair(const Flag& grown, const Flag& flag, int k) {
  require(grown.n() == flag.n() && grown.d() == flag.d(), ErrorKind::DimensionMismatch,
          "flags of different shape");
  check_step(flag, k);
  for (int l = 0; l <= flag.n(); ++l) {
    if (l != k && !(grown[l] == flag[l])) return false;
  }
  return grown[k].contains(flag[k]) && grown[k].dim() == flag[k].dim() + 1;
}

namespace {

RatSubspace reduction_target(const Flag& flag, const NilEndo& x, int k) {
  check_pair(x, flag);
  check_step(flag, k);
  require(flag_membership(x, flag), ErrorKind::Membership, "flag is not in the Spaltenstein fiber of x");
  return linalg::intersect(flag[k + 1], linalg::preimage(x.matrix(), flag[k - 1]));
}

}  // namespace

int epsilon_k_flag(const Flag& flag, const NilEndo& x, int k) {
  return static_cast<int>(reduction_target(flag, x, k).dim() - flag[k].dim());
}

FlagReduction flag_reduce(const Flag& flag, const NilEndo& x, int k) {
  RatSubspace target = reduction_target(flag, x, k);
  const int c = static_cast<int>(target.dim() - flag[k].dim());
  if (c == 0) return {flag, 0};
  return {flag.with_step(k, std::move(target)), c};
}

RatMat commutator(const RatMat& a, const RatMat& b) { return a * b - b * a; }

bool Sl2Triple::relations_hold() const {
  return exactly_equal(commutator(h, x), RatMat(2 * x)) &&
         exactly_equal(commutator(h, y), RatMat(-2 * y)) && exactly_equal(commutator(x, y), h);
}

bool Sl2Slice::contains(const RatMat& u) const {
  if (u.rows() != triple_.x.rows() || u.cols() != triple_.x.cols()) return false;
  if (!is_zero(linalg::matrix_power(u, bound_))) return false;
  return is_zero(commutator(RatMat(u - triple_.x), triple_.y));
}

Sl2Slice sl2_slice(const NilEndo& x) {
  const RatMat& m = x.matrix();
  const Index d = m.rows();
  // successor[j] = i when x e_j = e_i; -1 when x e_j = 0.
  std::vector<Index> successor(static_cast<std::size_t>(d), -1);
  std::vector<bool> has_preimage(static_cast<std::size_t>(d), false);
  for (Index col = 0; col < d; ++col) {
    for (Index row = 0; row < d; ++row) {
      const Rational& entry = m(row, col);
      if (entry == Rational(0)) continue;
      require(entry == Rational(1) && successor[static_cast<std::size_t>(col)] < 0 &&
                  !has_preimage[static_cast<std::size_t>(row)],
              ErrorKind::Precondition, "x is not in Jordan chain layout");
      successor[static_cast<std::size_t>(col)] = row;
      has_preimage[static_cast<std::size_t>(row)] = true;
    }
  }
  RatMat y = RatMat::Zero(d, d);
  RatMat h = RatMat::Zero(d, d);
  for (Index top = 0; top < d; ++top) {
    if (has_preimage[static_cast<std::size_t>(top)]) continue;
    // chain[0] = top, chain[t] = x^t top; in block coordinates e_i = chain[m - i].
    std::vector<Index> chain{top};
    while (successor[static_cast<std::size_t>(chain.back())] >= 0)
      chain.push_back(successor[static_cast<std::size_t>(chain.back())]);
    const long size = static_cast<long>(chain.size());
    for (long i = 1; i <= size; ++i) {
      const Index e_i = chain[static_cast<std::size_t>(size - i)];
      h(e_i, e_i) = Rational(size + 1 - 2 * i);
      if (i < size) {
        const Index e_next = chain[static_cast<std::size_t>(size - i - 1)];
        y(e_next, e_i) = Rational(i * (size - i));
      }
    }
  }
  return Sl2Slice(Sl2Triple{m, std::move(y), std::move(h)}, x.bound());
}

}  // namespace geocrystal
