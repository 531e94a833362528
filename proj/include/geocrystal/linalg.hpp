#pragma once

// Exact linear algebra over a field scalar, with subspaces kept in reduced
// column-echelon form so that equal subspaces have identical bases.

#include "geocrystal/error.hpp"
#include "geocrystal/rational.hpp"

#include <Eigen/Core>

#include <string>
#include <utility>
#include <vector>

namespace geocrystal::linalg {

using Eigen::Index;

template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row, increasing
};

/// Gauss-Jordan reduction to reduced row-echelon form.
template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> out{input, {}};
  Mat<Scalar>& a = out.reduced;
  const Index rows = a.rows();
  const Index cols = a.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r) {
      if (a(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    const Scalar lead = a(row, col);
    if (lead != Scalar(1)) {
      for (Index c = col; c < cols; ++c) a(row, c) /= lead;
    }
    for (Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col);
      for (Index c = col; c < cols; ++c) {
        if (a(row, c) != Scalar(0)) a(r, c) -= factor * a(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

template <typename Scalar>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<Scalar>::Zero(ambient, 0);
    return s;
  }

  static Subspace full(Index ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = Mat<Scalar>::Identity(ambient, ambient);
    for (Index i = 0; i < ambient; ++i) s.pivots_.push_back(i);
    return s;
  }

  /// Span of the columns; the ambient dimension is the number of rows.
  template <typename Derived>
  static Subspace span(const Eigen::MatrixBase<Derived>& columns) {
    Subspace s;
    s.ambient_ = columns.rows();
    Echelon<Scalar> e = rref(columns.transpose());
    const Index dim = static_cast<Index>(e.pivots.size());
    s.basis_ = e.reduced.topRows(dim).transpose();
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// ambient x dim, reduced column-echelon form.
  const Mat<Scalar>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Component of u off the subspace along the echelon complement.
  template <typename Derived>
  Vec<Scalar> residual(const Eigen::MatrixBase<Derived>& u) const {
    require(u.rows() == ambient_ && u.cols() == 1, ErrorKind::DimensionMismatch,
            "vector does not live in the ambient space");
    Vec<Scalar> r = u;
    for (Index j = 0; j < dim(); ++j) {
      const Scalar coeff = r(pivots_[static_cast<std::size_t>(j)]);
      if (coeff != Scalar(0)) r -= coeff * basis_.col(j);
    }
    return r;
  }

  template <typename Derived>
  bool contains_vector(const Eigen::MatrixBase<Derived>& u) const {
    return geocrystal::is_zero(residual(u));
  }

  bool contains(const Subspace& other) const {
    require(other.ambient_ == ambient_, ErrorKind::DimensionMismatch, "ambient mismatch");
    for (Index j = 0; j < other.dim(); ++j)
      if (!contains_vector(other.basis_.col(j))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && exactly_equal(a.basis_, b.basis_);
  }

 private:
  Index ambient_ = 0;
  Mat<Scalar> basis_ = Mat<Scalar>::Zero(0, 0);
  std::vector<Index> pivots_;
};

using RatSubspace = Subspace<Rational>;

template <typename Derived>
Subspace<typename Derived::Scalar> canonicalize(const Eigen::MatrixBase<Derived>& spanning,
                                                Index ambient) {
  require(spanning.rows() == ambient, ErrorKind::DimensionMismatch,
          "spanning set has " + std::to_string(spanning.rows()) + " rows, ambient is " +
              std::to_string(ambient));
  return Subspace<typename Derived::Scalar>::span(spanning);
}

/// Null space as a subspace of the domain.
template <typename Derived>
Subspace<typename Derived::Scalar> kernel(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  const Index cols = m.cols();
  Echelon<Scalar> e = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  Mat<Scalar> spanning = Mat<Scalar>::Zero(cols, cols - static_cast<Index>(e.pivots.size()));
  Index out = 0;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    spanning(f, out) = Scalar(1);
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      spanning(e.pivots[i], out) = -e.reduced(static_cast<Index>(i), f);
    ++out;
  }
  return Subspace<Scalar>::span(spanning);
}

template <typename Derived>
Subspace<typename Derived::Scalar> image(const Eigen::MatrixBase<Derived>& m) {
  return Subspace<typename Derived::Scalar>::span(m);
}

template <typename Derived>
std::pair<Subspace<typename Derived::Scalar>, Subspace<typename Derived::Scalar>>
kernel_and_image(const Eigen::MatrixBase<Derived>& m) {
  return {kernel(m), image(m)};
}

template <typename Scalar>
Subspace<Scalar> sum(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::DimensionMismatch, "ambient mismatch");
  Mat<Scalar> joined(a.ambient_dim(), a.dim() + b.dim());
  joined << a.basis(), b.basis();
  return Subspace<Scalar>::span(joined);
}

template <typename Scalar>
Subspace<Scalar> intersect(const Subspace<Scalar>& a, const Subspace<Scalar>& b) {
  require(a.ambient_dim() == b.ambient_dim(), ErrorKind::DimensionMismatch, "ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace<Scalar>::zero(a.ambient_dim());
  Mat<Scalar> joint(a.ambient_dim(), a.dim() + b.dim());
  joint << a.basis(), -b.basis();
  const Subspace<Scalar> relations = kernel(joint);
  Mat<Scalar> coeffs = relations.basis().topRows(a.dim());
  return Subspace<Scalar>::span(Mat<Scalar>(a.basis() * coeffs));
}

template <typename Scalar>
std::pair<Subspace<Scalar>, Subspace<Scalar>> intersect_and_sum(const Subspace<Scalar>& a,
                                                                const Subspace<Scalar>& b) {
  return {intersect(a, b), sum(a, b)};
}

/// {u : m u in s}.
template <typename Derived>
Subspace<typename Derived::Scalar> preimage(const Eigen::MatrixBase<Derived>& m,
                                            const Subspace<typename Derived::Scalar>& s) {
  using Scalar = typename Derived::Scalar;
  require(m.rows() == s.ambient_dim(), ErrorKind::DimensionMismatch,
          "subspace does not live in the codomain");
  if (s.is_full()) return Subspace<Scalar>::full(m.cols());
  Mat<Scalar> joint(m.rows(), m.cols() + s.dim());
  joint << m, -s.basis();
  const Subspace<Scalar> relations = kernel(joint);
  return Subspace<Scalar>::span(Mat<Scalar>(relations.basis().topRows(m.cols())));
}

/// m(s) as a subspace of the codomain.
template <typename Derived>
Subspace<typename Derived::Scalar> apply(const Eigen::MatrixBase<Derived>& m,
                                         const Subspace<typename Derived::Scalar>& s) {
  using Scalar = typename Derived::Scalar;
  require(m.cols() == s.ambient_dim(), ErrorKind::DimensionMismatch,
          "subspace does not live in the domain");
  return Subspace<Scalar>::span(Mat<Scalar>(m * s.basis()));
}

template <typename Scalar>
bool contains(const Subspace<Scalar>& outer, const Subspace<Scalar>& inner) {
  return outer.contains(inner);
}

/// Inclusion of the listed coordinates of Q^ambient, as an ambient x coords.size() matrix.
template <typename Scalar>
Mat<Scalar> coordinate_inclusion(const std::vector<Index>& coords, Index ambient) {
  Mat<Scalar> out = Mat<Scalar>::Zero(ambient, static_cast<Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) out(coords[i], static_cast<Index>(i)) = Scalar(1);
  return out;
}

/// Image of a subspace of a coordinate block under coordinate inclusion.
template <typename Scalar>
Subspace<Scalar> embed(const Subspace<Scalar>& s, const std::vector<Index>& coords, Index ambient) {
  require(s.ambient_dim() == static_cast<Index>(coords.size()), ErrorKind::DimensionMismatch,
          "coordinate list does not match subspace ambient");
  return apply(coordinate_inclusion<Scalar>(coords, ambient), s);
}

/// Exact inverse; throws Precondition on a singular matrix.
template <typename Derived>
Mat<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
  const Index n = m.rows();
  Mat<Scalar> augmented(n, 2 * n);
  augmented << m, Mat<Scalar>::Identity(n, n);
  Echelon<Scalar> e = rref(augmented);
  require(static_cast<Index>(e.pivots.size()) >= n && (n == 0 || e.pivots[static_cast<std::size_t>(n - 1)] == n - 1),
          ErrorKind::Precondition, "matrix is singular");
  return e.reduced.rightCols(n);
}

template <typename Derived>
Mat<typename Derived::Scalar> matrix_power(const Eigen::MatrixBase<Derived>& m, int exponent) {
  using Scalar = typename Derived::Scalar;
  require(m.rows() == m.cols(), ErrorKind::DimensionMismatch, "power of a non-square matrix");
  Mat<Scalar> out = Mat<Scalar>::Identity(m.rows(), m.cols());
  for (int i = 0; i < exponent; ++i) out = out * m;
  return out;
}

}  // namespace geocrystal::linalg
