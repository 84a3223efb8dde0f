#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

#include "mrba/rational.hpp"

// Exact linear algebra over an arbitrary field scalar. Plain Gauss-Jordan
// elimination; pivoting strategy is irrelevant over an exact field.
namespace mrba::linalg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// A matrix cannot span or contain another of incompatible ambient dimension.
class NotASubspace : public std::domain_error {
 public:
  explicit NotASubspace(const std::string& what) : std::domain_error(what) {}
};

template <typename Scalar>
struct RrefResult {
  DenseMatrix<Scalar> matrix;
  std::vector<Eigen::Index> pivots;  // pivot column of row i, in row order
};

/// Reduced row echelon form; row space preserved.
template <typename Scalar>
RrefResult<Scalar> rref(const DenseMatrix<Scalar>& input) {
  RrefResult<Scalar> result{input, {}};
  DenseMatrix<Scalar>& m = result.matrix;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < rows; ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    m.row(row) /= m(row, col);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r != row && m(r, col) != Scalar(0)) m.row(r) -= m(r, col) * m.row(row);
    }
    result.pivots.push_back(col);
    ++row;
  }
  return result;
}

template <typename Scalar>
Eigen::Index rank(const DenseMatrix<Scalar>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

/// Basis of { v : m v = 0 }. Size is cols - rank; each vector is exact.
template <typename Scalar>
std::vector<DenseVector<Scalar>> kernelBasis(const DenseMatrix<Scalar>& m) {
  const RrefResult<Scalar> red = rref(m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> isPivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index p : red.pivots) isPivot[static_cast<std::size_t>(p)] = true;
  std::vector<DenseVector<Scalar>> basis;
  for (Eigen::Index free = 0; free < cols; ++free) {
    if (isPivot[static_cast<std::size_t>(free)]) continue;
    DenseVector<Scalar> v = DenseVector<Scalar>::Zero(cols);
    v(free) = Scalar(1);
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      v(red.pivots[i]) = -red.matrix(static_cast<Eigen::Index>(i), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Any particular solution of m x = b, or nullopt when the system is
/// inconsistent. Dimension mismatch is misuse and throws instead.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve(const DenseMatrix<Scalar>& m,
                                         const DenseVector<Scalar>& b) {
  if (b.rows() != m.rows()) throw std::invalid_argument("solve: rhs dimension mismatch");
  DenseMatrix<Scalar> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  const RrefResult<Scalar> red = rref(aug);
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    const Eigen::Index col = red.pivots[i];
    if (col == m.cols()) return std::nullopt;  // pivot in the augmented column
    x(col) = red.matrix(static_cast<Eigen::Index>(i), m.cols());
  }
  return x;
}

/// Columns of m at the pivot positions: a basis of the column space.
template <typename Scalar>
DenseMatrix<Scalar> columnSpaceBasis(const DenseMatrix<Scalar>& m) {
  const RrefResult<Scalar> red = rref(m);
  DenseMatrix<Scalar> basis(m.rows(), static_cast<Eigen::Index>(red.pivots.size()));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) {
    basis.col(static_cast<Eigen::Index>(i)) = m.col(red.pivots[i]);
  }
  return basis;
}

/// dim(ambient / sub) where both arguments list generators as columns.
/// Throws NotASubspace unless span(sub) is contained in span(ambient).
template <typename Scalar>
Eigen::Index quotientDim(const DenseMatrix<Scalar>& sub, const DenseMatrix<Scalar>& ambient) {
  if (sub.rows() != ambient.rows()) throw std::invalid_argument("quotientDim: ambient dimension mismatch");
  const Eigen::Index ambientRank = rank(ambient);
  DenseMatrix<Scalar> joined(ambient.rows(), ambient.cols() + sub.cols());
  joined.leftCols(ambient.cols()) = ambient;
  joined.rightCols(sub.cols()) = sub;
  if (rank(joined) != ambientRank) throw NotASubspace("quotientDim: sub is not contained in ambient");
  return ambientRank - rank(sub);
}

/// True when span(columns of sub) is contained in span(columns of ambient).
template <typename Scalar>
bool spanContains(const DenseMatrix<Scalar>& ambient, const DenseMatrix<Scalar>& sub) {
  if (sub.rows() != ambient.rows()) return false;
  DenseMatrix<Scalar> joined(ambient.rows(), ambient.cols() + sub.cols());
  joined.leftCols(ambient.cols()) = ambient;
  joined.rightCols(sub.cols()) = sub;
  return rank(joined) == rank(ambient);
}

}  // namespace mrba::linalg

namespace mrba {
using RatMatrix = linalg::DenseMatrix<Rational>;
using RatVector = linalg::DenseVector<Rational>;

inline RatMatrix ratIdentity(Eigen::Index n) { return RatMatrix::Identity(n, n); }
inline RatMatrix ratZero(Eigen::Index r, Eigen::Index c) { return RatMatrix::Zero(r, c); }
}  // namespace mrba
