#pragma once

#include <span>
#include <string>
#include <vector>

#include "lsakit/poly.hpp"
#include "lsakit/section.hpp"
#include "lsakit/vector_field.hpp"

namespace lsakit {

/// Dense matrix with polynomial entries, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMatrix identity(std::size_t n, std::size_t nvars);
  static PolyMatrix diagonal(const std::vector<Poly>& diag);
  /// Matrix whose columns are the given sections (all of equal rank).
  static PolyMatrix from_columns(const std::vector<Section>& columns, std::size_t nvars);
  /// [[a, b], [c, d]] from four compatible blocks.
  static PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                           const PolyMatrix& d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  Section column(std::size_t j) const;
  bool is_zero() const noexcept;
  bool is_constant() const noexcept;
  bool is_symmetric() const;

  PolyMatrix transpose() const;
  PolyMatrix operator-() const;
  PolyMatrix& operator+=(const PolyMatrix& other);
  PolyMatrix& operator-=(const PolyMatrix& other);
  friend PolyMatrix operator+(PolyMatrix a, const PolyMatrix& b) { return a += b; }
  friend PolyMatrix operator-(PolyMatrix a, const PolyMatrix& b) { return a -= b; }
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& m);
  friend PolyMatrix operator*(const Rational& q, const PolyMatrix& m);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  /// Matrix-vector product on section components.
  Section apply(const Section& s) const;
  /// Entrywise derivation X(M).
  PolyMatrix derive(const VectorField& x) const;

  /// Determinant by cofactor expansion over column subsets.
  Poly determinant() const;
  PolyMatrix adjugate() const;

  std::string to_string(std::span<const std::string> coords) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> entries_;
};

/// Polynomial inverse adj(M)/det(M). Refuses unless det(M) is a nonzero constant:
/// NotSquare, SingularMatrix (det = 0), NonConstantDeterminant.
PolyMatrix matrix_inverse_adjugate(const PolyMatrix& m);

/// Commutator AB - BA.
PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace lsakit
