#include "lsakit/matrix.hpp"

#include <bit>
#include <cstdint>
#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

// Determinant of the submatrix with the given rows (in order) and columns (in order).
Poly subdeterminant(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return Poly::constant(m.nvars(), 1);
  if (k > 20) throw Error(Errc::DimensionMismatch, "matrix too large for cofactor expansion");
  // minors[mask] = det of the top popcount(mask) rows restricted to the columns in mask.
  std::vector<Poly> minors(std::size_t{1} << k, Poly(m.nvars()));
  minors[0] = Poly::constant(m.nvars(), 1);
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    const int row = std::popcount(mask) - 1;
    Poly acc(m.nvars());
    for (std::size_t c = 0; c < k; ++c) {
      if (!(mask & (1u << c))) continue;
      const Poly& entry = m(rows[row], cols[c]);
      const std::uint32_t rest = mask & ~(1u << c);
      if (entry.is_zero() || minors[rest].is_zero()) continue;
      const int above = std::popcount(mask >> (c + 1));
      Poly t = entry * minors[rest];
      if (above % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    minors[mask] = std::move(acc);
  }
  return minors[(1u << k) - 1];
}

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, Poly(nvars)) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw Error(Errc::DimensionMismatch, "matrix entry count does not match its shape");
  }
  for (const auto& e : entries_) nvars_ = std::max(nvars_, e.nvars());
  for (auto& e : entries_) {
    if (e.nvars() != nvars_) e = e.extended(nvars_);
  }
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars) {
  PolyMatrix m(n, n, nvars);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(nvars, 1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& diag) {
  std::size_t nvars = 0;
  for (const auto& d : diag) nvars = std::max(nvars, d.nvars());
  PolyMatrix m(diag.size(), diag.size(), nvars);
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i].extended(nvars);
  return m;
}

PolyMatrix PolyMatrix::from_columns(const std::vector<Section>& columns, std::size_t nvars) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().rank();
  PolyMatrix m(rows, columns.size(), nvars);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rank() != rows) {
      throw Error(Errc::DimensionMismatch, "columns of unequal length");
    }
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

PolyMatrix PolyMatrix::blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c,
                              const PolyMatrix& d) {
  if (a.rows_ != b.rows_ || c.rows_ != d.rows_ || a.cols_ != c.cols_ || b.cols_ != d.cols_) {
    throw Error(Errc::DimensionMismatch, "incompatible block shapes");
  }
  const std::size_t nvars = std::max({a.nvars_, b.nvars_, c.nvars_, d.nvars_});
  PolyMatrix m(a.rows_ + c.rows_, a.cols_ + b.cols_, nvars);
  auto place = [&](const PolyMatrix& blk, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < blk.rows_; ++i)
      for (std::size_t j = 0; j < blk.cols_; ++j) m(r0 + i, c0 + j) = blk(i, j).extended(nvars);
  };
  place(a, 0, 0);
  place(b, 0, a.cols_);
  place(c, a.rows_, 0);
  place(d, a.rows_, a.cols_);
  return m;
}

Section PolyMatrix::column(std::size_t j) const {
  std::vector<Poly> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return Section(std::move(out));
}

bool PolyMatrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

bool PolyMatrix::is_constant() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_constant()) return false;
  }
  return true;
}

bool PolyMatrix::is_symmetric() const { return is_square() && *this == transpose(); }

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(Errc::DimensionMismatch, "matrix sum of different shapes");
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  nvars_ = std::max(nvars_, other.nvars_);
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& other) { return *this += -other; }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(Errc::DimensionMismatch, "matrix product of incompatible shapes");
  }
  PolyMatrix m(a.rows_, b.cols_, std::max(a.nvars_, b.nvars_));
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Poly& bkj = b(k, j);
        if (!bkj.is_zero()) m(i, j) += aik * bkj;
      }
    }
  }
  return m;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& e : r.entries_) {
    if (!e.is_zero()) e = f * e;
  }
  r.nvars_ = std::max(r.nvars_, f.nvars());
  return r;
}

PolyMatrix operator*(const Rational& q, const PolyMatrix& m) {
  PolyMatrix r = m;
  for (auto& e : r.entries_) e *= q;
  return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

Section PolyMatrix::apply(const Section& s) const {
  if (s.rank() != cols_) {
    throw Error(Errc::DimensionMismatch, "matrix with " + std::to_string(cols_) +
                                             " columns applied to a section of rank " +
                                             std::to_string(s.rank()));
  }
  std::size_t nv = nvars_;
  for (const auto& c : s.components()) nv = std::max(nv, c.nvars());
  Section out = Section::zero(rows_, nv);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (s[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Poly& e = (*this)(i, j);
      if (!e.is_zero()) out[i] += e * s[j];
    }
  }
  return out;
}

PolyMatrix PolyMatrix::derive(const VectorField& x) const {
  PolyMatrix r(rows_, cols_, x.dim());
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = x.apply(entries_[k]);
  return r;
}

Poly PolyMatrix::determinant() const {
  if (!is_square()) throw Error(Errc::NotSquare, "determinant of a non-square matrix");
  std::vector<std::size_t> idx(rows_);
  for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
  return subdeterminant(*this, idx, idx);
}

PolyMatrix PolyMatrix::adjugate() const {
  if (!is_square()) throw Error(Errc::NotSquare, "adjugate of a non-square matrix");
  const std::size_t n = rows_;
  PolyMatrix adj(n, n, nvars_);
  if (n == 1) {
    adj(0, 0) = Poly::constant(nvars_, 1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Poly minor = subdeterminant(*this, rows, cols);
      adj(j, i) = ((i + j) % 2 == 0) ? minor : -minor;
    }
  }
  return adj;
}

std::string PolyMatrix::to_string(std::span<const std::string> coords) const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j).to_string(coords);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

PolyMatrix matrix_inverse_adjugate(const PolyMatrix& m) {
  if (!m.is_square()) throw Error(Errc::NotSquare, "only square matrices can be inverted");
  const Poly det = m.determinant();
  if (det.is_zero()) throw Error(Errc::SingularMatrix, "determinant is zero");
  if (!det.is_constant()) {
    throw Error(Errc::NonConstantDeterminant,
                "determinant is not a constant; the inverse is not polynomial");
  }
  const Rational inv = 1 / det.constant_term();
  return inv * m.adjugate();
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) { return a * b - b * a; }

}  // namespace lsakit
