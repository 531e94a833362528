#pragma once

// sl_n Cartan data, weights, compositions, dimension vectors and partitions,
// plus the index bijection a(v, w) shared by the flag and quiver pictures.

#include "geocrystal/error.hpp"

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

namespace geocrystal {

using IntMat = Eigen::MatrixXi;
using IntVec = Eigen::VectorXi;

/// A_{n-1} Cartan matrix, (n-1) x (n-1).
IntMat cartan_matrix(int n);

struct CartanData {
  int n = 2;
  IntMat C;

  explicit CartanData(int rank_n) : n(rank_n), C(cartan_matrix(rank_n)) {}
  int vertices() const { return n - 1; }
};

/// Element of the sl_n weight lattice, stored in fundamental-weight coordinates.
class Weight {
 public:
  Weight() = default;
  explicit Weight(IntVec omega_coords);

  static Weight fundamental(int n, int k);
  static Weight simple_root(int n, int k);
  /// From epsilon coordinates; only differences of neighbours matter.
  static Weight from_eps(std::span<const int> eps);

  int rank() const { return static_cast<int>(omega_.size()) + 1; }
  const IntVec& omega() const { return omega_; }
  /// n coordinates with the last one normalised to 0.
  std::vector<int> eps() const;
  bool is_dominant() const;

  Weight operator+(const Weight& other) const;
  Weight operator-(const Weight& other) const;
  Weight operator*(int scalar) const;
  friend bool operator==(const Weight& a, const Weight& b) { return a.omega_ == b.omega_; }

 private:
  IntVec omega_;
};

/// <h_k, mu> for 1 <= k <= n-1.
int pair_with_coroot(const Weight& mu, int k);

/// Dominant weight w = sum w_k omega_k, all w_k >= 0.
struct HighestWeight {
  IntVec w;

  HighestWeight() = default;
  explicit HighestWeight(IntVec coords);
  HighestWeight(std::initializer_list<int> coords);

  int rank() const { return static_cast<int>(w.size()) + 1; }
  int operator[](int k) const { return w(k - 1); }  // 1-based vertex
  /// d = sum k w_k.
  int degree() const;
  Weight weight() const { return Weight(w); }
  friend bool operator==(const HighestWeight& a, const HighestWeight& b) { return a.w == b.w; }
};

/// Graded dimension vector of the quiver side.
struct DimVec {
  IntVec v;

  DimVec() = default;
  explicit DimVec(IntVec coords);
  DimVec(std::initializer_list<int> coords);

  static DimVec zero(int n) { return DimVec(IntVec::Zero(n - 1)); }
  /// Indicator vector e^k.
  static DimVec unit(int n, int k);

  int rank() const { return static_cast<int>(v.size()) + 1; }
  int operator[](int k) const { return v(k - 1); }
  int total() const { return v.sum(); }
  friend bool operator==(const DimVec& a, const DimVec& b) { return a.v == b.v; }
};

/// omega_w - alpha_v.
Weight weight_of(const HighestWeight& w, const DimVec& v);

/// n non-negative parts.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p);
  Composition(std::initializer_list<int> p);

  int n() const { return static_cast<int>(parts.size()); }
  int total() const;
  int operator[](int i) const { return parts[static_cast<std::size_t>(i - 1)]; }  // 1-based
  /// sum a_k eps_k.
  Weight weight() const;
  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;
};

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);
  Partition(std::initializer_list<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  bool empty() const { return parts.empty(); }
  Partition conjugate() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Dominance order: lambda >= mu (requires equal sizes).
bool dominates(const Partition& lambda, const Partition& mu);

/// lambda_k = w_k + ... + w_{n-1}, trailing zeros dropped.
Partition hw_to_partition(const HighestWeight& w);
/// Strict reading: sum k w_k = d.
bool is_partition_of(const HighestWeight& w, int d);
/// GL reading: some partition of d with at most n rows reduces to lambda(w)
/// after deleting full columns.
bool occurs_in_tensor_power(const HighestWeight& w, int d);
/// Dominant sl_n weight of a partition with at most n rows.
HighestWeight partition_to_hw(const Partition& lambda, int n);

enum class Shift { Plus, Minus };

/// d_k^+ or d_k^-; std::nullopt is the ghost composition.
std::optional<Composition> comp_shift(const Composition& d, int k, Shift sign);

/// a(v, w) of the quiver-to-flag dictionary.
Composition a_of_vw(const DimVec& v, const HighestWeight& w);
/// Inverse of a_of_vw for fixed w.
DimVec v_of_aw(const Composition& a, const HighestWeight& w);
/// Same as a_of_vw but returns nullopt instead of throwing on negative parts.
std::optional<Composition> try_a_of_vw(const DimVec& v, const HighestWeight& w);

/// lambda_d = 1^{alpha_1 - alpha_2} 2^{alpha_2 - alpha_3} ... n^{alpha_n}.
Partition jordan_type(const Composition& d);

/// All compositions of d into n parts, lexicographically decreasing.
std::vector<Composition> compositions(int d, int n);
/// All partitions of d with at most max_parts parts, reverse lexicographic.
std::vector<Partition> partitions(int d, int max_parts);

}  // namespace geocrystal
