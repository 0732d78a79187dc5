#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lsakit {

/// Exact rational scalars. gmpxx keeps results canonical (reduced, positive denominator).
using Rational = mpq_class;

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exponents;
  Rational coefficient;
};

/// Maximum total degree any polynomial operation may produce; exceeding it raises
/// Errc::DegreeOverflow. Defaults to 16.
unsigned max_total_degree() noexcept;
void set_max_total_degree(unsigned degree) noexcept;

/// Graded-lexicographic "greater than": higher total degree first, ties broken by the
/// first differing exponent.
bool grlex_greater(const Exponents& a, const Exponents& b) noexcept;

/// Multivariate polynomial over Q in a fixed number of coordinates.
///
/// Terms are stored in strictly decreasing graded-lexicographic order with no zero
/// coefficients, so structural equality is polynomial equality. A polynomial in zero
/// variables is a rational constant; constants are promoted to any coordinate count
/// when mixed with other polynomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& value);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly monomial(Exponents exponents, const Rational& coefficient);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const noexcept;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(unsigned exponent) const;
  /// Formal partial derivative; throws IndexOutOfRange when `var >= nvars()`.
  Poly derivative(std::size_t var) const;
  /// Substitutes a rational value for one coordinate and removes that coordinate.
  Poly specialize(std::size_t var, const Rational& value) const;
  /// Re-embeds into `nvars` coordinates by appending zero exponents.
  Poly extended(std::size_t nvars) const;

  /// Human-readable form that parse_poly accepts back, e.g. "3/2*x^2*y - y + 1".
  std::string to_string(std::span<const std::string> names) const;

 private:
  static Poly from_unsorted(std::size_t nvars, std::vector<Term> terms);
  void promote_to(std::size_t nvars);
  friend std::size_t common_nvars(Poly& a, Poly& b);

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

Poly partial_derivative(const Poly& p, std::size_t var);

std::string rational_to_string(const Rational& q);

}  // namespace lsakit
