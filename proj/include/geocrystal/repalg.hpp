#pragma once

// The tensor module (Q^n)^{(x)d} with its Chevalley action, its decomposition
// into irreducibles, the quotient dimensions dim U/I_d and dim U/J_w, and
// Kostka/RSK combinatorics.

#include "geocrystal/cartan.hpp"
#include "geocrystal/crystal.hpp"

#include <Eigen/SparseCore>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace geocrystal {

using SparseInt = Eigen::SparseMatrix<std::int64_t>;

/// Default bound on n^d; GEOCRYSTAL_BUDGET overrides it.
inline constexpr long kDefaultBudget = 100000;
long size_budget();

/// Basis vectors are words of length d, indexed lexicographically.
class TensorAction {
 public:
  TensorAction(int n, int d, long budget = size_budget());

  int n() const { return n_; }
  int d() const { return d_; }
  long dim() const { return dim_; }
  const SparseInt& e(int k) const { return e_.at(static_cast<std::size_t>(k - 1)); }
  const SparseInt& f(int k) const { return f_.at(static_cast<std::size_t>(k - 1)); }
  const SparseInt& h(int k) const { return h_.at(static_cast<std::size_t>(k - 1)); }

  Word word(long index) const;
  long index(const Word& word) const;

  /// [e_k, f_k] = h_k, [h_k, e_k] = 2 e_k, [h_k, f_k] = -2 f_k for every k.
  bool relations_hold() const;

 private:
  int n_, d_;
  long dim_;
  std::vector<SparseInt> e_, f_, h_;
};

struct Constituent {
  Partition lambda;     // GL highest weight, at most n rows
  HighestWeight hw;     // sl_n highest weight
  long multiplicity = 0;
  long dimension = 0;
  /// Dimension of each weight space of one copy, keyed by content.
  std::map<Composition, long> weight_dims;
};

struct Decomposition {
  int n = 2;
  int d = 0;
  std::vector<Constituent> constituents;  // lambda in reverse lexicographic order

  long total_dim() const;
  const Constituent* find(const Partition& lambda) const;
};

/// Multiplicities from singular vectors in each dominant weight space;
/// dimensions by generating one copy with the f_k.
Decomposition decompose_tensor(int n, int d, long budget = size_budget());

/// Hook-content formula; full columns are allowed.
long irrep_dim(const Partition& lambda, int n);

/// Sum of squared dimensions over distinct sl_n constituents of (Q^n)^{(x)d}.
long dim_quotient_Id(int n, int d, long budget = size_budget());
long dim_quotient_Id(const Decomposition& dec);
/// Same quantity from partitions and irrep_dim alone.
long dim_quotient_Id_weyl(int n, int d);

struct WeightStatus {
  HighestWeight mu;
  bool expressible = false;  // mu = omega_w - alpha_v with v >= 0
  DimVec v;
  long multiplicity = 0;     // in L(omega_w), from the crystal
  bool is_weight() const { return multiplicity > 0; }
};

WeightStatus weight_status(const HighestWeight& w, const HighestWeight& mu);
/// All dominant mu = omega_w - alpha_v, v >= 0, with their weight status.
std::vector<WeightStatus> dominant_weights_of(const HighestWeight& w);

/// Sum over dominant weights mu of L(omega_w) of irrep_dim(mu)^2, via the crystal.
long dim_quotient_Jw(const HighestWeight& w);
/// Same quantity read off the tensor decomposition of degree sum k w_k.
long dim_quotient_Jw_tensor(const HighestWeight& w, long budget = size_budget());
/// As above, reusing a decomposition of the matching degree.
long dim_quotient_Jw_tensor(const HighestWeight& w, const Decomposition& dec);

/// Semistandard tableaux of shape lambda and content a.
long kostka(const Partition& lambda, const Composition& a);

/// Non-negative integer matrices with row sums d1 and column sums d2.
long margin_matrix_count(const Composition& d1, const Composition& d2);

using Tableau = std::vector<std::vector<int>>;
using IntMatrix = std::vector<std::vector<int>>;

struct TableauPair {
  Tableau P, Q;
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
};

/// Row insertion of the two-line array of m; P has content of column sums, Q of row sums.
TableauPair rsk(const IntMatrix& m);
IntMatrix inverse_rsk(const TableauPair& pq, int rows, int cols);
/// All matrices with the given margins, in lexicographic order.
std::vector<IntMatrix> margin_matrices(const Composition& d1, const Composition& d2);

struct Fact {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, long>> values;
};

struct Sl3Report {
  std::vector<Fact> facts;
  bool passed() const;
};

using IrrepDimFn = std::function<long(const Partition&, int)>;

/// The sl_3 comparison of I_3 and J_{(1,1)}; irrep_dim is injectable.
Sl3Report verify_sl3_example(const IrrepDimFn& dim_fn = irrep_dim, long budget = size_budget());

}  // namespace geocrystal
