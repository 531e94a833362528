#pragma once

// Points (B, i, j) of the doubled A_{n-1} quiver with framing, the moment
// map, nilpotency and stability, the Lagrangian locus Lambda(v, w), and the
// Hecke/crystal quotient operations.
//
// Conventions: B(k, l) is the map V_k -> V_l along the edge h_{k,l};
// Omega = {h_{k,k-1}} carries sign +1 and its reverse -1, so
//   mu_k = B(k+1,k) B(k,k+1) - B(k-1,k) B(k,k-1) + i_k j_k.

#include "geocrystal/cartan.hpp"
#include "geocrystal/linalg.hpp"
#include "geocrystal/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace geocrystal {

using linalg::RatSubspace;

struct QuiverEdge {
  int from = 1;
  int to = 2;

  bool in_omega() const { return to == from - 1; }
  int sign() const { return in_omega() ? 1 : -1; }
  QuiverEdge bar() const { return {to, from}; }
  friend bool operator==(const QuiverEdge&, const QuiverEdge&) = default;
};

/// Vertex set {1..n-1} with all edges h_{k,l}, |k - l| = 1.
struct QuiverShape {
  int n = 2;

  explicit QuiverShape(int rank_n);
  int vertices() const { return n - 1; }
  /// Ordered: rightward edges k->k+1 first, then leftward k->k-1, each by k.
  std::vector<QuiverEdge> edges() const;
  std::vector<QuiverEdge> outgoing(int k) const;
  std::vector<QuiverEdge> incoming(int k) const;
};

class QuiverRep {
 public:
  /// All maps zero.
  QuiverRep(DimVec v, HighestWeight w);

  int n() const { return w_.rank(); }
  const DimVec& v() const { return v_; }
  const HighestWeight& w() const { return w_; }
  QuiverShape shape() const { return QuiverShape(n()); }

  const RatMat& B(int from, int to) const;
  RatMat& B(int from, int to);
  const RatMat& i(int k) const { return i_.at(static_cast<std::size_t>(k - 1)); }
  RatMat& i(int k) { return i_.at(static_cast<std::size_t>(k - 1)); }
  const RatMat& j(int k) const { return j_.at(static_cast<std::size_t>(k - 1)); }
  RatMat& j(int k) { return j_.at(static_cast<std::size_t>(k - 1)); }

  /// Throws when any map has the wrong shape.
  void validate() const;

  friend bool operator==(const QuiverRep& a, const QuiverRep& b);

 private:
  std::size_t edge_slot(int from, int to) const;

  DimVec v_;
  HighestWeight w_;
  std::vector<RatMat> up_;    // B(k, k+1), k = 1..n-2
  std::vector<RatMat> down_;  // B(k, k-1), k = 2..n-1
  std::vector<RatMat> i_;
  std::vector<RatMat> j_;
};

/// One subspace S_k of V_k per vertex.
using GradedSubspace = std::vector<RatSubspace>;

std::vector<RatMat> moment_map(const QuiverRep& r);
bool moment_map_vanishes(const QuiverRep& r);

/// Every path composition of B of sufficient length vanishes; decided by
/// iterating the graded image (+)_h B_h(U) until it is zero or stabilises.
bool is_nilpotent_B(const QuiverRep& r);

/// Smallest B-stable graded subspace containing im i.
GradedSubspace stable_closure(const QuiverRep& r);
bool is_stable(const QuiverRep& r);

/// j = 0, mu = 0 and B nilpotent.
bool in_Lambda(const QuiverRep& r);
/// Name of the first failing Lambda condition, if any.
std::optional<std::string> lambda_violation(const QuiverRep& r);

/// Joint kernel of the B_h leaving vertex k.
RatSubspace joint_kernel(const QuiverRep& r, int k);
int epsilon_k_point(const QuiverRep& r, int k);

struct DimAndSign {
  long dim_M = 0;
  long r_k = 0;
};

/// dim M(v, w) = v . (2w - Cv) and r_k(v, w) = -e^k . (w - Cv) - 1.
DimAndSign dim_and_sign(const DimVec& v, const HighestWeight& w, int k);

/// Induced point on V/S; S must be B-invariant and killed by j.
QuiverRep quotient_by_invariant_subspace(const QuiverRep& r, const GradedSubspace& S);

struct QuiverReduction {
  QuiverRep point;
  int c = 0;
};

/// Quotient by the joint kernel at vertex k (graded dimension c e^k).
QuiverReduction kashiwara_reduce(const QuiverRep& r, int k);

/// g (B, i, j) = (g B g^{-1}, g i, j g^{-1}) for invertible g_k on each V_k.
QuiverRep gauge_transform(const QuiverRep& r, const std::vector<RatMat>& g);
/// Random invertible small-integer matrices, one per vertex.
std::vector<RatMat> random_gauge(const DimVec& v, std::uint64_t seed);

struct SamplerOptions {
  int max_attempts = 400;
  int entry_bound = 2;
};

/// Deterministic per seed; the result passes in_Lambda and is_stable.
/// Throws ErrorKind::Exhausted after max_attempts rejected draws.
QuiverRep sample_lambda_point(const DimVec& v, const HighestWeight& w, std::uint64_t seed,
                              const SamplerOptions& options = {});

/// mu restricted to the edges of one orientation, as a linear map in the
/// entries of the other orientation's maps (columns follow edge order, then
/// column-major entries). Used by the sampler.
RatMat moment_map_linear_system(const QuiverRep& fixed, bool solve_for_omega);

}  // namespace geocrystal
