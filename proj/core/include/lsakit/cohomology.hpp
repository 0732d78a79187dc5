#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "lsakit/algebroid.hpp"
#include "lsakit/linalg.hpp"
#include "lsakit/report.hpp"
#include "lsakit/representation.hpp"
#include "lsakit/tensor.hpp"

namespace lsakit {

/// Key of a frame component: an increasing tuple for the skew slots plus the last index.
using SlotKey = std::pair<IndexTuple, std::size_t>;

/// Element of C^k(A,E) = Gamma(Hom(Lambda^{k-1}A (x) A, E)), k >= 1: a C-infinity-multilinear
/// map of k sections, skew in the first k-1, stored by frame components.
class RepCochain {
 public:
  RepCochain() = default;
  RepCochain(std::size_t rank, std::size_t erank, std::size_t degree, std::size_t nvars);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t erank() const noexcept { return erank_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<SlotKey, Section>& components() const noexcept { return components_; }
  bool is_zero() const noexcept { return components_.empty(); }

  /// Component for an arbitrary order of the skew slots (sign applied).
  Section at(IndexTuple skew, std::size_t last) const;
  void set(IndexTuple skew, std::size_t last, const Section& value);
  /// Value on arbitrary sections; throws ArityError.
  Section evaluate(std::span<const Section> args) const;
  friend bool operator==(const RepCochain& a, const RepCochain& b);

 private:
  std::size_t rank_ = 0;
  std::size_t erank_ = 0;
  std::size_t degree_ = 0;
  std::size_t nvars_ = 0;
  std::map<SlotKey, Section> components_;
};

/// The differential applied to arbitrary sections x_1..x_{n+1}:
///   sum_i (-1)^{i+1} rho(x_i) w(..^i..)
/// + sum_i (-1)^{i+1} mu(x_{n+1}) w(..^i.., x_n, x_i)
/// - sum_i (-1)^{i+1} w(..^i.., x_n, x_i . x_{n+1})
/// + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^i..^j.., x_{n+1}),   i, j <= n.
Section rep_d_eval(const LSAlgebroid& a, const Representation& rep, const RepCochain& w,
                   std::span<const Section> args);
/// Throws NotARepresentation, InvalidDegree (degree 0: use rep_d0).
RepCochain rep_d(const LSAlgebroid& a, const Representation& rep, const RepCochain& w);
RepCochain rep_d_unchecked(const LSAlgebroid& a, const Representation& rep, const RepCochain& w);
/// d(e)(x) = mu(x)e - rho(x)e.
RepCochain rep_d0(const LSAlgebroid& a, const Representation& rep, const Section& e);

/// rho(e_i)rho(e_j)e - rho(e_i.e_j)e = 0 on all frame pairs.
Report c0_report(const LSAlgebroid& a, const Representation& rep, const Section& e);
bool check_c0(const LSAlgebroid& a, const Representation& rep, const Section& e);

/// Basis of C^k over a point: (skew tuple, last index, E component), lexicographic.
std::vector<std::tuple<IndexTuple, std::size_t, std::size_t>> point_cochain_basis(
    std::size_t rank, std::size_t erank, std::size_t degree);
/// Matrix of d: C^k -> C^{k+1} (k >= 1) in the bases above; throws NotPointCase.
RationalMatrix rep_d_matrix(const LSAlgebroid& a, const Representation& rep, std::size_t degree);

struct CohomologyRow {
  std::size_t degree = 0;
  std::size_t dim_cochains = 0;
  std::size_t dim_cocycles = 0;
  std::size_t dim_coboundaries = 0;
  std::size_t dim_cohomology = 0;
};

struct PointCohomology {
  /// dim C^0 and dim ker(d restricted to C^0).
  std::size_t dim_c0 = 0;
  std::size_t dim_c0_kernel = 0;
  /// Basis of C^0 as constant E-sections.
  std::vector<Section> c0_basis;
  /// Degrees 1..max_degree.
  std::vector<CohomologyRow> rows;
};

/// Exact dimensions over Q; throws NotPointCase, NotARepresentation.
PointCohomology point_cohomology_dims(const LSAlgebroid& a, const Representation& rep,
                                      std::size_t max_degree);

/// Element of Der^k(A), k >= 1: values D(e_I, e_j) (skew in I, |I| = k-1) and
/// symbols sigma_D(e_I) (fully skew). Degree 1 with zero symbol is a bundle map.
class MultiDerivation {
 public:
  MultiDerivation() = default;
  MultiDerivation(std::size_t rank, std::size_t degree, std::size_t nvars);
  /// The degree-1 multiderivation x -> N x (zero symbol).
  static MultiDerivation bundle_map(const PolyMatrix& n);

  std::size_t rank() const noexcept { return rank_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<SlotKey, Section>& values() const noexcept { return values_; }
  const std::map<IndexTuple, VectorField>& symbols() const noexcept { return symbols_; }
  bool is_zero() const noexcept { return values_.empty() && symbols_.empty(); }

  Section value_at(IndexTuple skew, std::size_t last) const;
  VectorField symbol_at(IndexTuple skew) const;
  void set_value(IndexTuple skew, std::size_t last, const Section& value);
  void set_symbol(IndexTuple skew, const VectorField& field);

  /// D(x_1..x_k): C-infinity-linear in the first k-1 slots, and
  /// D(.., f y) = f D(.., y) + sigma_D(..)(f) y in the last. Throws ArityError.
  Section evaluate(std::span<const Section> args) const;
  /// sigma_D(x_1..x_{k-1}); throws ArityError.
  VectorField evaluate_symbol(std::span<const Section> args) const;

  MultiDerivation operator-() const;
  MultiDerivation& operator+=(const MultiDerivation& other);
  MultiDerivation& operator-=(const MultiDerivation& other);
  friend MultiDerivation operator+(MultiDerivation a, const MultiDerivation& b) { return a += b; }
  friend MultiDerivation operator-(MultiDerivation a, const MultiDerivation& b) { return a -= b; }
  friend bool operator==(const MultiDerivation& a, const MultiDerivation& b);

 private:
  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  std::size_t nvars_ = 0;
  std::map<SlotKey, Section> values_;
  std::map<IndexTuple, VectorField> symbols_;
};

/// Deformation differential on arbitrary sections x_1..x_{n+1}:
///   sum_i (-1)^{i+1} x_i . w(..^i..)
/// + sum_i (-1)^{i+1} w(..^i.., x_n, x_i) . x_{n+1}
/// - sum_i (-1)^{i+1} w(..^i.., x_n, x_i . x_{n+1})
/// + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^i..^j.., x_{n+1}),   i, j <= n.
Section def_d_eval(const LSAlgebroid& a, const MultiDerivation& w, std::span<const Section> args);
/// Symbol of d_def w on x_1..x_n:
///   sum_i (-1)^{i+1} [a(x_i), sigma_w(..^i..)]
/// + sum_{i<j} (-1)^{i+j} sigma_w([x_i,x_j], ..^i..^j..)
/// + sum_i (-1)^{i+1} a(w(..^i.., x_n, x_i)).
VectorField def_d_symbol_eval(const LSAlgebroid& a, const MultiDerivation& w,
                              std::span<const Section> args);
/// Throws InvalidDegree for degree 0 and DimensionMismatch for a foreign bundle.
MultiDerivation def_d(const LSAlgebroid& a, const MultiDerivation& w);

}  // namespace lsakit
