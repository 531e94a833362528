#include "geocrystal/cartan.hpp"

#include <doctest.h>

#include <functional>
#include <optional>

using namespace geocrystal;

namespace {

// Every v with entries in [0, bound] at rank n.
std::vector<DimVec> all_dimvecs(int n, int bound) {
  std::vector<DimVec> out;
  IntVec v = IntVec::Zero(n - 1);
  std::function<void(int)> fill = [&](int pos) {
    if (pos == n - 1) {
      out.emplace_back(v);
      return;
    }
    for (int x = 0; x <= bound; ++x) {
      v(pos) = x;
      fill(pos + 1);
    }
  };
  fill(0);
  return out;
}

std::vector<HighestWeight> all_weights(int n, int bound) {
  std::vector<HighestWeight> out;
  for (const DimVec& v : all_dimvecs(n, bound)) out.emplace_back(v.v);
  return out;
}

}  // namespace

TEST_CASE("Cartan matrices of type A") {
  IntMat a1(1, 1);
  a1 << 2;
  CHECK(cartan_matrix(2) == a1);
  IntMat a2(2, 2);
  a2 << 2, -1, -1, 2;
  CHECK(cartan_matrix(3) == a2);
  IntMat a3(3, 3);
  a3 << 2, -1, 0, -1, 2, -1, 0, -1, 2;
  CHECK(cartan_matrix(4) == a3);
  CHECK_THROWS_AS(cartan_matrix(1), Error);
}

TEST_CASE("pairing with coroots") {
  CHECK(pair_with_coroot(Weight::fundamental(3, 1), 1) == 1);
  CHECK(pair_with_coroot(Weight::simple_root(3, 1), 1) == 2);
  const Weight mu = weight_of(HighestWeight{1, 1}, DimVec{1, 0});
  CHECK(pair_with_coroot(mu, 1) == -1);
  CHECK(pair_with_coroot(mu, 2) == 2);
  CHECK_THROWS_AS(pair_with_coroot(mu, 3), Error);
}

TEST_CASE("epsilon coordinates agree with fundamental-weight coordinates") {
  const std::vector<int> eps{3, 1, 1};
  const Weight w = Weight::from_eps(eps);
  CHECK(w.omega() == (IntVec(2) << 2, 0).finished());
  CHECK(Weight::from_eps(std::vector<int>{4, 2, 2}) == w);  // shift by the all-ones vector
  CHECK(w.eps() == std::vector<int>{2, 0, 0});
}

TEST_CASE("highest weights as partitions") {
  CHECK(hw_to_partition(HighestWeight{1, 1}) == Partition{2, 1});
  CHECK(is_partition_of(HighestWeight{1, 1}, 3));
  CHECK(hw_to_partition(HighestWeight{3, 0}) == Partition{3});
  CHECK(is_partition_of(HighestWeight{3, 0}, 3));
  CHECK(hw_to_partition(HighestWeight{0, 0}).empty());
  CHECK(is_partition_of(HighestWeight{0, 0}, 0));
  // The trivial module sits in degree 3 only under the GL reading.
  CHECK_FALSE(is_partition_of(HighestWeight{0, 0}, 3));
  CHECK(occurs_in_tensor_power(HighestWeight{0, 0}, 3));
  CHECK_FALSE(occurs_in_tensor_power(HighestWeight{0, 0}, 2));
  for (int n = 2; n <= 5; ++n)
    for (const HighestWeight& w : all_weights(n, 3)) {
      CHECK(hw_to_partition(w).size() == w.degree());
      CHECK(partition_to_hw(hw_to_partition(w), n) == w);
    }
}

TEST_CASE("composition shifts") {
  CHECK(comp_shift(Composition{1, 1, 1}, 1, Shift::Plus) == Composition{2, 0, 1});
  CHECK(comp_shift(Composition{1, 0, 1}, 1, Shift::Minus) == Composition{0, 1, 1});
  CHECK_FALSE(comp_shift(Composition{0, 1, 1}, 1, Shift::Minus).has_value());
  CHECK_THROWS_AS(comp_shift(Composition{1, 1, 1}, 3, Shift::Plus), Error);
  for (const Composition& d : compositions(4, 4))
    for (int k = 1; k <= 3; ++k) {
      const auto up = comp_shift(d, k, Shift::Plus);
      if (!up) continue;
      const auto back = comp_shift(*up, k, Shift::Minus);
      REQUIRE(back.has_value());
      CHECK(*back == d);
    }
}

TEST_CASE("the a(v, w) dictionary") {
  const HighestWeight w{1, 1};
  CHECK(a_of_vw(DimVec{0, 0}, w) == Composition{2, 1, 0});
  CHECK(a_of_vw(DimVec{1, 1}, w) == Composition{1, 1, 1});
  CHECK(a_of_vw(DimVec{2, 1}, w) == Composition{0, 2, 1});
  CHECK(v_of_aw(Composition{1, 1, 1}, w) == DimVec{1, 1});
  CHECK(v_of_aw(Composition{2, 1, 0}, w) == DimVec{0, 0});
  try {
    v_of_aw(Composition{3, 0, 0}, w);
    FAIL("expected not-in-image");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInImage);
  }
  try {
    v_of_aw(Composition{1, 1, 0}, w);
    FAIL("expected incompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Incompatible);
  }
}

TEST_CASE("a(v, w) round trips and matches the coroot pairing") {
  for (int n = 2; n <= 5; ++n) {
    const IntMat C = cartan_matrix(n);
    for (const HighestWeight& w : all_weights(n, 2))
      for (const DimVec& v : all_dimvecs(n, 3)) {
        const auto a = try_a_of_vw(v, w);
        if (!a) continue;
        CHECK(a->total() == w.degree());
        CHECK(v_of_aw(*a, w) == v);
        const IntVec pairing = w.w - C * v.v;
        for (int k = 1; k < n; ++k) CHECK((*a)[k] - (*a)[k + 1] == pairing(k - 1));
      }
    // Conversely every composition in the image comes back.
    for (const HighestWeight& w : all_weights(n, 1))
      for (const Composition& a : compositions(w.degree(), n)) {
        std::optional<DimVec> v;
        try {
          v = v_of_aw(a, w);
        } catch (const Error& e) {
          CHECK(e.kind() == ErrorKind::NotInImage);
        }
        if (v) CHECK(a_of_vw(*v, w) == a);
      }
  }
}

TEST_CASE("Jordan type of a composition") {
  CHECK(jordan_type(Composition{2, 1, 0}) == Partition{2, 1});
  CHECK(jordan_type(Composition{1, 1, 1}) == Partition{3});
  CHECK(jordan_type(Composition{3, 0, 0}) == Partition{1, 1, 1});
  // The columns of lambda_d are the sorted parts of d.
  for (const Composition& d : compositions(5, 3)) {
    std::vector<int> sorted = d.parts;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
    CHECK(jordan_type(d).conjugate() == Partition(sorted));
  }
}

TEST_CASE("partition and composition enumeration") {
  CHECK(compositions(3, 3).size() == 10);
  CHECK(compositions(0, 2).size() == 1);
  CHECK(partitions(5, 5).size() == 7);
  CHECK(partitions(6, 2).size() == 4);
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(dominates(Partition{3}, Partition{2, 1}));
  CHECK_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), Error);
  CHECK_THROWS_AS(Composition({1, -1}), Error);
}
