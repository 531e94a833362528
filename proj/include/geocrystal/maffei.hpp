#pragma once

// The map theta from stable Lambda-points to flags in the Spaltenstein fiber
// of the block shift x, built from left-then-right paths and the maps phi_k.

#include "geocrystal/cartan.hpp"
#include "geocrystal/flag.hpp"
#include "geocrystal/quiver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace geocrystal {

/// Descends start -> bottom, then ascends bottom -> end.
struct LeftRightPath {
  int start = 1;
  int bottom = 1;
  int end = 1;

  int ord() const { return start - bottom; }
  int out() const { return start; }
  int inc() const { return end; }
  bool is_empty() const { return start == bottom && bottom == end; }
  friend bool operator==(const LeftRightPath&, const LeftRightPath&) = default;
};

/// Ordered by (start, bottom, end); includes the empty path at each vertex.
std::vector<LeftRightPath> enum_paths(int n);

/// B_p : V_start -> V_end.
RatMat path_matrix(const QuiverRep& r, const LeftRightPath& p);

class ThetaContext {
 public:
  explicit ThetaContext(HighestWeight w);

  const HighestWeight& w() const { return w_; }
  int n() const { return w_.rank(); }
  Eigen::Index d() const { return static_cast<Eigen::Index>(shift_.basis.size()); }
  const NilEndo& x() const { return shift_.x; }
  const std::vector<CopyLabel>& basis() const { return shift_.basis; }
  /// Coordinates of W^{<=k} in Q^d, increasing; k = 0..n.
  const std::vector<Eigen::Index>& prefix(int k) const { return prefix_.at(static_cast<std::size_t>(k)); }
  /// Coordinate of the first basis vector of W_vertex^{(copy)}.
  Eigen::Index copy_offset(int vertex, int copy) const;
  /// Position of a coordinate inside prefix(k).
  Eigen::Index prefix_position(int k, Eigen::Index coordinate) const;

 private:
  HighestWeight w_;
  BlockShift shift_;
  std::vector<std::vector<Eigen::Index>> prefix_;
};

/// phi_k : W^{<=k} -> V_k, columns in prefix(k) order. Requires j = 0.
RatMat phi_k(const QuiverRep& r, const ThetaContext& ctx, int k);

/// F_k = ker phi_k inside Q^d; throws Precondition off the stable Lambda locus.
Flag theta(const QuiverRep& r, const ThetaContext& ctx);

struct SpecialTheta {
  RatMat x;
  Flag flag;
};

/// W concentrated at vertex 1: x = j i and F_l = ker(B_{l-1,l} ... B_{12} i_1).
SpecialTheta theta_w1_special(const QuiverRep& r);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

bool check_comm1(const QuiverRep& r, const ThetaContext& ctx);
bool check_comm2(const QuiverRep& r, const ThetaContext& ctx);
bool check_flag_subspace(const QuiverRep& r, const ThetaContext& ctx);
bool check_composition(const QuiverRep& r, const ThetaContext& ctx);
bool check_membership(const QuiverRep& r, const ThetaContext& ctx);
bool check_surjectivity(const QuiverRep& r, const ThetaContext& ctx);
bool check_epsilon_agreement(const QuiverRep& r, const ThetaContext& ctx);
bool check_reduction_intertwining(const QuiverRep& r, const ThetaContext& ctx);
bool check_gauge_invariance(const QuiverRep& r, const ThetaContext& ctx, std::uint64_t seed);
/// Jordan type of the flag composition dominates that of x.
bool check_jordan_dominance(const QuiverRep& r, const ThetaContext& ctx);

/// Every vertex k with a nonzero joint kernel contributes one random line S;
/// theta of the quotient and of r must form a Hecke pair at k.
/// Returns the number of data checked, or -1 on the first failure.
int check_hecke(const QuiverRep& r, const ThetaContext& ctx, std::uint64_t seed);

/// comm1, comm2, flag_subspace, lang_isom (composition and membership),
/// surjectivity, epsilon_agreement, reduction_intertwining.
std::vector<CheckResult> theta_checks(const QuiverRep& r, const ThetaContext& ctx);

}  // namespace geocrystal
