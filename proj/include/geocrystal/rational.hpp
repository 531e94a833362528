#pragma once

// Exact rational scalar usable as an Eigen scalar type.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <string>

namespace geocrystal {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RatMat = Mat<Rational>;
using RatVec = Vec<Rational>;

/// "p/q" with q > 0 and gcd(p, q) = 1; integers still carry "/1".
std::string to_string(const Rational& r);

/// Accepts "p/q", "p", or surrounding whitespace-free signed forms.
Rational parse_rational(const std::string& text);

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) != Scalar(0)) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index c = 0; c < a.cols(); ++c)
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

/// Lifts an integer matrix into the rational scalar type.
template <typename Derived>
RatMat to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = Rational(static_cast<long>(m(r, c)));
  return out;
}

}  // namespace geocrystal
