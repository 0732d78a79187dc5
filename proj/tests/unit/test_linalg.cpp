#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/error.hpp"
#include "lsakit/linalg.hpp"
#include "lsakit/matrix.hpp"

using namespace lsakit;

namespace {

/// Fraction-free (Bareiss) elimination over the integers, used as a rank oracle.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rank][c] * m[i][j] - m[i][c] * m[rank][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rank and kernel agree with a fraction-free oracle") {
    RandomSource rng(3);
    for (int trial = 0; trial < 200; ++trial) {
      const auto rows = static_cast<std::size_t>(rng.integer(1, 6));
      const auto cols = static_cast<std::size_t>(rng.integer(1, 6));
      const auto inner = static_cast<std::size_t>(rng.integer(1, 4));
      // Product of random integer factors has rank at most `inner`.
      std::vector<std::vector<mpz_class>> u(rows, std::vector<mpz_class>(inner));
      std::vector<std::vector<mpz_class>> v(inner, std::vector<mpz_class>(cols));
      for (auto& r : u) for (auto& e : r) e = rng.integer(-3, 3);
      for (auto& r : v) for (auto& e : r) e = rng.integer(-3, 3);
      std::vector<std::vector<mpz_class>> prod(rows, std::vector<mpz_class>(cols, 0));
      RationalMatrix m(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          for (std::size_t k = 0; k < inner; ++k) prod[i][j] += u[i][k] * v[k][j];
          m(i, j) = Rational(prod[i][j]);
        }
      }
      const KernelAndRank kr = rational_kernel_and_rank(m);
      CHECK(kr.rank == bareiss_rank(prod));
      CHECK(kr.rank + kr.kernel.size() == cols);
      for (const auto& vec : kr.kernel) {
        for (const auto& entry : m.apply(vec)) CHECK(entry == 0);
      }
    }
  }

  TEST_CASE("determinant, adjugate and inverse") {
    const std::vector<std::string> x{"x"};
    const PolyMatrix m = fx::matrix({{"1", "x", "0"}, {"0", "1", "x^2"}, {"2", "0", "1"}}, x);
    // Rule of Sarrus: 1*1*1 + x*x^2*2 + 0 - 0 - 0 - 0 = 1 + 2x^3.
    CHECK(m.determinant() == fx::poly("1 + 2*x^3", x));
    const PolyMatrix adj = m.adjugate();
    CHECK(m * adj == m.determinant() * PolyMatrix::identity(3, 1));

    const PolyMatrix unimodular = fx::matrix({{"1", "x"}, {"0", "1"}}, x);
    CHECK(unimodular * matrix_inverse_adjugate(unimodular) == PolyMatrix::identity(2, 1));

    auto code_of = [](const PolyMatrix& p) {
      try {
        matrix_inverse_adjugate(p);
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::IoError;
    };
    CHECK(code_of(fx::matrix({{"1", "2"}}, x)) == Errc::NotSquare);
    CHECK(code_of(fx::matrix({{"1", "2"}, {"2", "4"}}, x)) == Errc::SingularMatrix);
    CHECK(code_of(fx::matrix({{"x", "0"}, {"0", "1"}}, x)) == Errc::NonConstantDeterminant);
  }
}
