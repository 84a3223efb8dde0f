#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mrba/linalg.hpp"

namespace mrba {

/// Dense three-index tensor of rationals, c[i][j][k] with fixed extents.
class Tensor3 {
 public:
  Tensor3() : d0_(0), d1_(0), d2_(0) {}
  Tensor3(Eigen::Index d0, Eigen::Index d1, Eigen::Index d2)
      : d0_(d0), d1_(d1), d2_(d2),
        data_(static_cast<std::size_t>(d0 * d1 * d2), Rational(0)) {}

  Eigen::Index dim0() const { return d0_; }
  Eigen::Index dim1() const { return d1_; }
  Eigen::Index dim2() const { return d2_; }

  const Rational& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    return data_[flat(i, j, k)];
  }
  Rational& operator()(Eigen::Index i, Eigen::Index j, Eigen::Index k) {
    return data_[flat(i, j, k)];
  }

  bool operator==(const Tensor3& other) const {
    return d0_ == other.d0_ && d1_ == other.d1_ && d2_ == other.d2_ && data_ == other.data_;
  }

  /// Fiber c(i, j, .) as a column vector.
  RatVector fiber(Eigen::Index i, Eigen::Index j) const {
    RatVector v(d2_);
    for (Eigen::Index k = 0; k < d2_; ++k) v(k) = (*this)(i, j, k);
    return v;
  }

 private:
  std::size_t flat(Eigen::Index i, Eigen::Index j, Eigen::Index k) const {
    if (i < 0 || i >= d0_ || j < 0 || j >= d1_ || k < 0 || k >= d2_)
      throw std::out_of_range("Tensor3 index out of range");
    return static_cast<std::size_t>((i * d1_ + j) * d2_ + k);
  }

  Eigen::Index d0_, d1_, d2_;
  std::vector<Rational> data_;
};

/// Lexicographic enumeration of length-k tuples over {0..base-1}; the first
/// component is the most significant digit.
class TupleIndexer {
 public:
  TupleIndexer(Eigen::Index base, int length) : base_(base), length_(length) {
    count_ = 1;
    for (int i = 0; i < length; ++i) count_ *= base;
  }

  Eigen::Index count() const { return count_; }
  int length() const { return length_; }

  Eigen::Index index(const std::vector<Eigen::Index>& tuple) const {
    Eigen::Index idx = 0;
    for (int t = 0; t < length_; ++t) idx = idx * base_ + tuple[static_cast<std::size_t>(t)];
    return idx;
  }

  std::vector<Eigen::Index> tuple(Eigen::Index index) const {
    std::vector<Eigen::Index> out(static_cast<std::size_t>(length_), 0);
    for (int t = length_ - 1; t >= 0; --t) {
      out[static_cast<std::size_t>(t)] = index % base_;
      index /= base_;
    }
    return out;
  }

 private:
  Eigen::Index base_;
  int length_;
  Eigen::Index count_;
};

}  // namespace mrba
