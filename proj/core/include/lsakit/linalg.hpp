#pragma once

#include <vector>

#include "lsakit/poly.hpp"

namespace lsakit {

/// Dense matrix over Q, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct KernelAndRank {
  std::size_t rank = 0;
  /// Basis of the right kernel; rank + kernel.size() == cols.
  std::vector<std::vector<Rational>> kernel;
};

/// Exact rank and kernel basis by Gauss-Jordan elimination over Q.
KernelAndRank rational_kernel_and_rank(const RationalMatrix& m);

}  // namespace lsakit
