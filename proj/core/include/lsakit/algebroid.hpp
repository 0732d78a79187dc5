#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lsakit/matrix.hpp"
#include "lsakit/poly.hpp"
#include "lsakit/report.hpp"
#include "lsakit/section.hpp"
#include "lsakit/tensor.hpp"
#include "lsakit/vector_field.hpp"

namespace lsakit {

/// Structure data shared by left-symmetric and Lie algebroids on a trivial bundle of
/// rank r over an affine chart with n coordinates: a table of frame products
/// table[i][j] and the anchor images a(e_i).
class FrameAlgebroid {
 public:
  FrameAlgebroid() = default;
  /// Throws DimensionMismatch when the table is not r x r of rank-r sections or an
  /// anchor field does not have n components.
  FrameAlgebroid(std::vector<std::string> coords, std::vector<std::vector<Section>> table,
                 std::vector<VectorField> anchor);

  std::size_t nvars() const noexcept { return coords_.size(); }
  std::size_t rank() const noexcept { return anchor_.size(); }
  bool is_point() const noexcept { return coords_.empty(); }
  const std::vector<std::string>& coords() const noexcept { return coords_; }
  const std::vector<std::vector<Section>>& table() const noexcept { return table_; }
  const std::vector<VectorField>& anchors() const noexcept { return anchor_; }
  const VectorField& anchor(std::size_t i) const { return anchor_.at(i); }

  /// a(x) = sum_i x_i a(e_i).
  VectorField anchor_of(const Section& x) const;
  Section basis(std::size_t i) const { return Section::basis(rank(), i, nvars()); }
  Section zero_section() const { return Section::zero(rank(), nvars()); }
  /// Applies a(x) componentwise to a section of any bundle.
  Section derive(const Section& x, const Section& u) const;

 protected:
  std::vector<std::string> coords_;
  std::vector<std::vector<Section>> table_;
  std::vector<VectorField> anchor_;
};

/// A (candidate) left-symmetric algebroid: table[i][j] = e_i . e_j. The axioms are
/// verified by check_left_symmetric, never assumed.
class LSAlgebroid : public FrameAlgebroid {
 public:
  using FrameAlgebroid::FrameAlgebroid;
  const Section& product(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
};

/// A (candidate) Lie algebroid: table[i][j] = [e_i, e_j].
class LieAlgebroid : public FrameAlgebroid {
 public:
  using FrameAlgebroid::FrameAlgebroid;
  const Section& bracket(std::size_t i, std::size_t j) const { return table_.at(i).at(j); }
};

/// x . y = sum f_i g_j c_ij + a(x)(g_j) e_j.
Section section_mult(const LSAlgebroid& a, const Section& x, const Section& y);
/// (x.y).z - x.(y.z)
Section associator(const LSAlgebroid& a, const Section& x, const Section& y, const Section& z);
/// Commutator x.y - y.x of the left-symmetric product.
Section commutator_bracket(const LSAlgebroid& a, const Section& x, const Section& y);
/// [x,y] = sum f_i g_j b_ij + a(x)(g_j) e_j - a(y)(f_i) e_i.
Section lie_bracket(const LieAlgebroid& l, const Section& x, const Section& y);

/// Frame associator symmetry and anchor compatibility a(e_i.e_j - e_j.e_i) = [a_i, a_j].
Report check_left_symmetric(const LSAlgebroid& a);

/// Commutator Lie algebroid with the same anchor; throws NotLeftSymmetric.
LieAlgebroid sub_adjacent(const LSAlgebroid& a);
/// Same table without validating the left-symmetric axioms.
LieAlgebroid commutator_algebroid(const LSAlgebroid& a);

/// Skewness, frame Jacobi identity and anchor morphism.
Report check_lie_algebroid(const LieAlgebroid& l);

/// phi(e_i .1 e_j) = phi(e_i) .2 phi(e_j) and a_2(phi(e_i)) = a_1(e_i).
/// phi is rank(A2) x rank(A1); throws DimensionMismatch on shape or chart mismatch.
Report lsa_homomorphism_report(const LSAlgebroid& a1, const LSAlgebroid& a2,
                               const PolyMatrix& phi);
bool check_lsa_homomorphism(const LSAlgebroid& a1, const LSAlgebroid& a2, const PolyMatrix& phi);

/// Six-term associator sum of a point algebra on all basis triples; throws NotPointCase.
bool check_lie_admissible(const LSAlgebroid& a);
Report lie_admissible_report(const LSAlgebroid& a);

/// A skew-symmetric C-infinity-multilinear k-form on a rank-r bundle, stored by its
/// components on increasing frame tuples (absent tuples are zero).
class FormCochain {
 public:
  FormCochain() = default;
  FormCochain(std::size_t rank, std::size_t degree, std::size_t nvars)
      : rank_(rank), degree_(degree), nvars_(nvars) {}

  std::size_t rank() const noexcept { return rank_; }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<IndexTuple, Poly>& components() const noexcept { return components_; }

  /// Component on an arbitrary frame tuple, with the permutation sign applied.
  Poly at(IndexTuple idx) const;
  /// Sets the component for an arbitrary tuple (stored with the sign normalized);
  /// repeated indices must come with a zero value.
  void set(IndexTuple idx, const Poly& value);
  Poly evaluate(std::span<const Section> args) const;
  bool is_zero() const noexcept { return components_.empty(); }
  friend bool operator==(const FormCochain& a, const FormCochain& b);

 private:
  std::size_t rank_ = 0;
  std::size_t degree_ = 0;
  std::size_t nvars_ = 0;
  std::map<IndexTuple, Poly> components_;
};

/// Lie algebroid differential on arbitrary sections:
/// d w(x_0..x_k) = sum_i (-1)^i a(x_i) w(..^i..) + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^i..^j..)
Poly lie_form_d_eval(const LieAlgebroid& l, const FormCochain& w, std::span<const Section> args);
/// Degree k+1 form; throws InvalidDegree when the degree exceeds the rank and
/// DimensionMismatch when the form lives on another bundle.
FormCochain lie_form_d(const LieAlgebroid& l, const FormCochain& w);

/// Substitutes a rational value for one coordinate of every structure function.
LSAlgebroid specialize(const LSAlgebroid& a, std::size_t var, const Rational& value);
/// Appends a coordinate (anchor component zero) so that it acts as a formal parameter.
LSAlgebroid extend_with_parameter(const LSAlgebroid& a, const std::string& name);

}  // namespace lsakit
