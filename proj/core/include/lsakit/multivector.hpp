#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>

#include "lsakit/algebroid.hpp"
#include "lsakit/report.hpp"
#include "lsakit/section.hpp"
#include "lsakit/tensor.hpp"

namespace lsakit {

/// Bit i set <=> e_{i+1} is a wedge factor; factors are kept in increasing order.
using WedgeMask = std::uint32_t;

/// Element of Gamma(Lambda^* A): sum over increasing frame wedges e_I with polynomial
/// coefficients. The empty wedge carries functions (grade 0).
class Multivector {
 public:
  static constexpr std::size_t kMaxRank = 32;

  Multivector() = default;
  /// Throws DimensionMismatch for rank above kMaxRank.
  Multivector(std::size_t rank, std::size_t nvars);

  static Multivector function(std::size_t rank, const Poly& f);
  static Multivector from_section(const Section& s);
  /// e_{i1} ^ ... ^ e_{ik} for any index order (sign applied, zero on repeats).
  static Multivector wedge_of(std::size_t rank, std::size_t nvars, const IndexTuple& idx);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<WedgeMask, Poly>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Grade when all terms share it (0 for the zero element); -1 when mixed.
  int grade() const noexcept;
  /// Component of a single grade.
  Multivector part(unsigned grade) const;

  void add_term(WedgeMask mask, const Poly& coefficient);

  Multivector operator-() const;
  Multivector& operator+=(const Multivector& other);
  Multivector& operator-=(const Multivector& other);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Poly& f, const Multivector& x);
  friend Multivector operator*(const Rational& q, const Multivector& x);
  friend bool operator==(const Multivector& a, const Multivector& b);

  /// e.g. "(x)*e1^e2 - e3 + 1"
  std::string to_string(std::span<const std::string> coords) const;

 private:
  std::size_t rank_ = 0;
  std::size_t nvars_ = 0;
  std::map<WedgeMask, Poly> terms_;
};

int popcount(WedgeMask m) noexcept;

Multivector wedge(const Multivector& x, const Multivector& y);

/// Extension of the left-symmetric product to multivectors. On decomposables
/// (x1^..^xk) . (y1^..^yl) = sum_{i,j} (-1)^{i+j} (xi.yj) ^ x1..^xi..xk ^ y1..^yj..yl;
/// x . f = a(x)(f) for grade 1; f . anything = 0; coefficients enter through
/// (f X) . Y = f (X . Y) and X . (g Y) = (X . g) ^ Y + g (X . Y). Bilinear in
/// non-homogeneous arguments.
Multivector dot_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y);

/// [x,y]_S = x.y - (-1)^{(|x|-1)(|y|-1)} y.x, extended bilinearly over grades.
Multivector bracket_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y);

/// C(x,y,z) = (x.y).z - x.(y.z)
Multivector associator_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                         const Multivector& z);
/// [x,y,z]_S = C(x,y,z) - (-1)^{(|x|-1)(|y|-1)} C(y,x,z); homogeneous x, y.
Multivector super_associator(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                             const Multivector& z);
/// CI(x,y,z): graded cyclic sum of super associators; homogeneous arguments.
Multivector cyclic_identity(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                            const Multivector& z);

struct SampleSpec {
  /// Largest wedge grade sampled.
  unsigned max_grade = 3;
  /// Lowest wedge grade sampled (0 includes functions).
  unsigned min_grade = 0;
  /// Coefficients range over all monomials up to this degree.
  unsigned coeff_degree = 2;
  /// Above this many triples, `samples` random triples are drawn instead.
  std::size_t max_exhaustive_triples = 60000;
  std::size_t samples = 4000;
  std::uint64_t seed = 1;
  /// Witnesses recorded per identity.
  std::size_t max_witnesses = 5;
};

/// CI = 0, the graded Leibniz rule, the graded Jacobi identity, super-associator
/// antisymmetry and the grade-1 reduction, on triples m_1 e_I, m_2 e_J, m_3 e_K with
/// monomial coefficients. Exhaustive triples span the whole multilinear range.
Report check_graded_properties(const LSAlgebroid& a, const SampleSpec& sampling = {});

}  // namespace lsakit
