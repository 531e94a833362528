#include "geocrystal/linalg.hpp"

#include <doctest.h>

#include <Eigen/LU>

#include <random>

using namespace geocrystal;
using linalg::Index;
using linalg::RatSubspace;

namespace {

RatMat random_int_matrix(std::mt19937_64& rng, Index rows, Index cols, int bound = 2) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  RatMat m(rows, cols);
  for (Index r = 0; r < rows; ++r)
    for (Index c = 0; c < cols; ++c) m(r, c) = dist(rng);
  return m;
}

/// Low-rank product so that kernels and intersections are non-trivial.
RatMat random_low_rank(std::mt19937_64& rng, Index rows, Index cols, Index rank) {
  return random_int_matrix(rng, rows, rank) * random_int_matrix(rng, rank, cols);
}

Index double_rank(const RatMat& m) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) d(r, c) = static_cast<double>(m(r, c));
  Eigen::FullPivLU<Eigen::MatrixXd> lu(d);
  return lu.rank();
}

}  // namespace

TEST_CASE("rational arithmetic is exact") {
  Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(5)) == "5/1");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("rank agrees with a floating-point LU on small integer matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5), cols = 1 + static_cast<Index>(rng() % 5);
    const RatMat m = random_low_rank(rng, rows, cols, 1 + static_cast<Index>(rng() % 3));
    CHECK(linalg::rank(m) == double_rank(m));
  }
}

TEST_CASE("rref produces reduced echelon form") {
  RatMat m(3, 4);
  m << 2, 4, 0, 2, 1, 2, 1, 3, 0, 0, 1, 2;
  const auto e = linalg::rref(m);
  REQUIRE(e.pivots == std::vector<Index>{0, 2});
  RatMat expected(3, 4);
  expected << 1, 2, 0, 1, 0, 0, 1, 2, 0, 0, 0, 0;
  CHECK(exactly_equal(e.reduced, expected));
}

TEST_CASE("kernel is annihilated and has complementary dimension") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Index rows = 1 + static_cast<Index>(rng() % 5), cols = 1 + static_cast<Index>(rng() % 6);
    const RatMat m = random_low_rank(rng, rows, cols, 1 + static_cast<Index>(rng() % 3));
    const RatSubspace k = linalg::kernel(m);
    CHECK(is_zero(RatMat(m * k.basis())));
    CHECK(k.dim() + linalg::rank(m) == cols);
  }
}

TEST_CASE("subspaces have a canonical basis") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const RatMat gens = random_int_matrix(rng, 5, 3);
    const RatMat mixer = random_int_matrix(rng, 3, 4);
    const RatSubspace a = RatSubspace::span(gens);
    const RatSubspace b = RatSubspace::span(RatMat(gens * mixer));
    if (linalg::rank(mixer) == 3) CHECK(a == b);
    CHECK(a.contains(b));
  }
  CHECK(RatSubspace::zero(3).is_zero());
  CHECK(RatSubspace::full(3).is_full());
  CHECK(RatSubspace::full(3) == RatSubspace::span(RatMat::Identity(3, 3)));
}

TEST_CASE("sum and intersection satisfy the dimension formula") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const Index ambient = 2 + static_cast<Index>(rng() % 5);
    const RatSubspace a = RatSubspace::span(random_low_rank(rng, ambient, 3, 1 + static_cast<Index>(rng() % 3)));
    const RatSubspace b = RatSubspace::span(random_low_rank(rng, ambient, 3, 1 + static_cast<Index>(rng() % 3)));
    const auto [meet, join] = linalg::intersect_and_sum(a, b);
    CHECK(meet.dim() + join.dim() == a.dim() + b.dim());
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(join.contains(a));
    CHECK(join.contains(b));
  }
}

TEST_CASE("preimage is the largest subspace mapped into the target") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMat m = random_low_rank(rng, 4, 5, 1 + static_cast<Index>(rng() % 3));
    const RatSubspace s = RatSubspace::span(random_int_matrix(rng, 4, 1 + static_cast<Index>(rng() % 3)));
    const RatSubspace pre = linalg::preimage(m, s);
    CHECK(s.contains(linalg::apply(m, pre)));
    const RatSubspace im = linalg::image(m);
    CHECK(pre.dim() == linalg::kernel(m).dim() + linalg::intersect(s, im).dim());
  }
}

TEST_CASE("exact inverse") {
  std::mt19937_64 rng(29);
  int inverted = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const RatMat m = random_int_matrix(rng, 3, 3);
    if (linalg::rank(m) < 3) {
      CHECK_THROWS_AS(linalg::inverse(m), Error);
      continue;
    }
    ++inverted;
    CHECK(exactly_equal(RatMat(m * linalg::inverse(m)), RatMat(RatMat::Identity(3, 3))));
  }
  CHECK(inverted > 0);
}

TEST_CASE("coordinate embedding") {
  const RatSubspace line = RatSubspace::span(RatVec::Ones(2));
  const RatSubspace embedded = linalg::embed(line, {0, 2}, 3);
  RatVec expected(3);
  expected << 1, 0, 1;
  CHECK(embedded == RatSubspace::span(expected));
  CHECK_THROWS_AS(linalg::embed(line, {0}, 3), Error);
}
