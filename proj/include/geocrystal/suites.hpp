#pragma once

// Batch verification suites behind `geocrystal verify`. Reports are ordered
// JSON and contain no timing, so equal configurations give equal bytes.

#include "geocrystal/serialize.hpp"

#include <cstdint>
#include <optional>

namespace geocrystal {

struct SuiteResult {
  std::string name;
  bool passed = false;
  Json report;
};

struct MaffeiSuiteConfig {
  std::uint64_t seed = 0;
  int samples = 500;
  /// Fixed rank and weight; otherwise n cycles through 2..5 with random w.
  std::optional<int> n;
  std::optional<HighestWeight> w;
  /// Largest degree sum k w_k drawn when w is random.
  int max_degree = 7;
};

/// theta checks, gauge invariance, Jordan dominance and Hecke data on sampled points.
SuiteResult run_maffei_suite(const MaffeiSuiteConfig& config);

/// s_k(a(v, w)) = r_k(v, w) and a_k - a_{k+1} = <h_k, omega_w - alpha_v> on the grid
/// 2 <= n <= n_max, 0 <= v_k, w_k <= entry_max.
SuiteResult run_signs_suite(int n_max = 6, int entry_max = 4);

/// Stembridge axioms, sizes, Kostka multiplicities and strata maps for every w
/// with n <= n_max and sum k w_k <= max_degree. The tensor cross-check runs
/// when n^d <= tensor_limit.
SuiteResult run_crystal_suite(int n_max = 4, int max_degree = 8, long tensor_limit = 729);

/// Quotient dimensions at one (n, d): dim U/I_d three ways, dim U/J_w two ways
/// for each w of degree d, RSK round trip on every margin matrix.
SuiteResult run_quotients_suite(int n, int d, long budget = size_budget());
/// run_quotients_suite over 2 <= n <= n_max, 0 <= d <= d_max.
SuiteResult run_quotients_grid(int n_max = 4, int d_max = 6, long budget = size_budget());

/// All four suites with their default grids.
SuiteResult run_all_suites(std::uint64_t seed, long budget = size_budget());

}  // namespace geocrystal
