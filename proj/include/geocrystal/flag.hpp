#pragma once

// n-step flags in Q^d, nilpotent endomorphisms and the flag-side quantities:
// Spaltenstein membership, compositions, dimension/sign exponents, Hecke
// pairs, the crystal statistic epsilon_k and its maximal reduction.

#include "geocrystal/cartan.hpp"
#include "geocrystal/linalg.hpp"
#include "geocrystal/rational.hpp"

#include <vector>

namespace geocrystal {

using linalg::RatSubspace;

/// A d x d matrix certified to satisfy x^n = 0.
class NilEndo {
 public:
  static NilEndo certify(RatMat x, int n);

  const RatMat& matrix() const { return x_; }
  Eigen::Index dim() const { return x_.rows(); }
  /// The exponent n with x^n = 0 that was certified.
  int bound() const { return bound_; }
  /// Smallest m with x^m = 0.
  int degree() const { return degree_; }

 private:
  NilEndo(RatMat x, int bound, int degree) : x_(std::move(x)), bound_(bound), degree_(degree) {}
  RatMat x_;
  int bound_ = 0;
  int degree_ = 0;
};

/// Block-diagonal shift with x e_{i+1} = e_i inside each block, blocks in
/// partition order. n defaults to the largest part.
NilEndo jordan_nilpotent(const Partition& lambda, int d, int n = 0);

/// Jordan type of a nilpotent matrix, from ranks of its powers.
Partition jordan_type_of(const RatMat& x);

/// Basis vector of Q^d = (+)_{k, m <= k} W_k^{(m)}: the index-th standard
/// vector of the copy W_vertex^{(copy)}.
struct CopyLabel {
  int vertex = 1;
  int copy = 1;
  int index = 0;
  friend bool operator==(const CopyLabel&, const CopyLabel&) = default;
};

struct BlockShift {
  NilEndo x;
  std::vector<CopyLabel> basis;  // ordered lexicographically by (vertex, copy, index)
};

/// x maps W_k^{(m)} identically onto W_k^{(m-1)} and kills W_k^{(1)}.
BlockShift block_shift_x(const HighestWeight& w);

class Flag {
 public:
  /// spaces = (F_0, ..., F_n); validated as a chain from 0 to the ambient space.
  explicit Flag(std::vector<RatSubspace> spaces);

  int n() const { return static_cast<int>(spaces_.size()) - 1; }
  Eigen::Index d() const { return spaces_.back().ambient_dim(); }
  const RatSubspace& operator[](int i) const { return spaces_[static_cast<std::size_t>(i)]; }
  const std::vector<RatSubspace>& spaces() const { return spaces_; }

  Flag with_step(int k, RatSubspace replacement) const;

  friend bool operator==(const Flag& a, const Flag& b) { return a.spaces_ == b.spaces_; }

 private:
  std::vector<RatSubspace> spaces_;
};

/// x(F_i) is contained in F_{i-1} for every i.
bool flag_membership(const NilEndo& x, const Flag& flag);

Composition composition_of(const Flag& flag);

/// Complex dimension of the partial flag manifold: sum_{i<j} d_i d_j.
long flag_dim(const Composition& d);

/// flag_dim(d_k^+) - flag_dim(d) = d_{k+1} - d_k - 1; throws on a ghost shift.
int s_k_exponent(const Composition& d, int k);

/// (F', F) in Y_{d_k^+, d}: equal away from k, F_k inside F'_k with codimension one.
bool is_hecke_pair(const Flag& grown, const Flag& flag, int k);

/// dim(F_{k+1} intersect x^{-1}(F_{k-1})) - dim F_k.
int epsilon_k_flag(const Flag& flag, const NilEndo& x, int k);

struct FlagReduction {
  Flag flag;
  int c = 0;
};

/// Replaces F_k by F_{k+1} intersect x^{-1}(F_{k-1}).
FlagReduction flag_reduce(const Flag& flag, const NilEndo& x, int k);

struct Sl2Triple {
  RatMat x, y, h;
  bool relations_hold() const;
};

/// Transversal slice S_x = {u nilpotent : [u - x, y] = 0}.
class Sl2Slice {
 public:
  Sl2Slice(Sl2Triple triple, int bound) : triple_(std::move(triple)), bound_(bound) {}

  const Sl2Triple& triple() const { return triple_; }
  bool contains(const RatMat& u) const;

 private:
  Sl2Triple triple_;
  int bound_;
};

/// Only defined for x whose nonzero entries are ones moving basis vectors
/// along chains (the layouts of jordan_nilpotent and block_shift_x).
Sl2Slice sl2_slice(const NilEndo& x);

RatMat commutator(const RatMat& a, const RatMat& b);

}  // namespace geocrystal
