#pragma once

// Tensor-word model of the sl_n crystal B(w).
//
// Bracketing convention: for the operators with index k, read the word left to
// right, treat each letter k as "(" and each letter k+1 as ")", and cancel
// matched pairs. What remains is ")...)(...(":
//   eps_k = number of unmatched k+1,  phi_k = number of unmatched k,
//   f_k turns the leftmost unmatched k into k+1,
//   e_k turns the rightmost unmatched k+1 into k.
// Highest-weight words are therefore lattice words read left to right, and the
// seed of shape lambda is its row reading 1^{lambda_1} 2^{lambda_2} ...

#include "geocrystal/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace geocrystal {

using Word = std::vector<int>;

/// Letters concatenated when n < 10, comma separated otherwise.
std::string word_to_string(const Word& word, int n);

struct BracketResult {
  int epsilon = 0;
  int phi = 0;
  std::optional<Word> e;
  std::optional<Word> f;
};

BracketResult tensor_word_ops(const Word& word, int k);

/// Row reading of the highest-weight tableau of shape lambda.
Word seed_word(const Partition& lambda);

/// Finite crystal given by its f-edges; e is read off as the inverse relation.
class CrystalGraph {
 public:
  static constexpr int kNone = -1;

  /// f_edges[k-1][x] = target vertex or kNone. Vertices must be sorted words.
  CrystalGraph(int n, std::vector<Word> vertices, std::vector<std::vector<int>> f_edges, int highest);

  int n() const { return n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Word>& vertices() const { return vertices_; }
  const Word& word(int x) const { return vertices_.at(static_cast<std::size_t>(x)); }
  int highest() const { return highest_; }
  std::optional<int> index_of(const Word& word) const;

  int f(int k, int x) const { return f_.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(x)); }
  int e(int k, int x) const { return e_.at(static_cast<std::size_t>(k - 1)).at(static_cast<std::size_t>(x)); }
  /// False when two f_k edges share a target, so e_k is not a function.
  bool e_well_defined() const { return e_well_defined_; }

  /// String lengths along the graph; -1 when the string does not terminate.
  int epsilon(int k, int x) const;
  int phi(int k, int x) const;
  /// Content of the word.
  Composition composition(int x) const;
  Weight weight(int x) const { return composition(x).weight(); }

  friend bool operator==(const CrystalGraph& a, const CrystalGraph& b) {
    return a.n_ == b.n_ && a.vertices_ == b.vertices_ && a.f_ == b.f_;
  }

  /// Copy with f_k(x) replaced by target; used to exercise the verifiers.
  CrystalGraph with_f_edge(int k, int x, int target) const;

 private:
  int n_;
  std::vector<Word> vertices_;
  std::vector<std::vector<int>> f_;
  std::vector<std::vector<int>> e_;
  int highest_;
  bool e_well_defined_ = true;
};

/// Letters 1..n with f_k(k) = k+1.
CrystalGraph standard_crystal(int n);

/// Closure of the seed word of shape lambda(w) under all f_k; throws Internal
/// if the seed is not killed by every e_k.
CrystalGraph highest_weight_crystal(const HighestWeight& w);

struct VertexStats {
  Weight wt;
  Composition a;
  std::vector<int> epsilon;
  std::vector<int> phi;
};

VertexStats vertex_stats(const CrystalGraph& g, int x);

/// Number of vertices whose content is a.
long weight_multiplicity(const CrystalGraph& g, const Composition& a);

struct CrystalReport {
  bool passed = true;
  std::string violation;
  std::vector<int> stratum_sizes;  // strata_maps only: count of vertices with eps_k = c
};

/// Inverse pairs, weight axioms, and Stembridge's simply-laced local axioms
/// with their duals.
CrystalReport stembridge_verify(const CrystalGraph& g);

/// Factorisation of e_k and f_k through the eps_k = 0 stratum, compared with
/// the bracketing operators on words.
CrystalReport strata_maps(const CrystalGraph& g, int k);

/// One node per vertex labelled by its composition; edges labelled k.
std::string to_dot(const CrystalGraph& g);

}  // namespace geocrystal
