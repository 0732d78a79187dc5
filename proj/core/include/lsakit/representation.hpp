#pragma once

#include <vector>

#include "lsakit/algebroid.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/report.hpp"
#include "lsakit/section.hpp"

namespace lsakit {

/// A pair (rho, mu) on a trivial bundle E of rank s. rho[i] is the matrix part of
/// rho(e_i), whose derivation part is the anchor a(e_i); mu[i] = mu(e_i) is tensorial.
struct Representation {
  std::size_t rank = 0;
  std::vector<PolyMatrix> rho;
  std::vector<PolyMatrix> mu;

  static Representation zero(std::size_t algebroid_rank, std::size_t rank, std::size_t nvars);
  friend bool operator==(const Representation& a, const Representation& b) = default;
};

/// Throws DimensionMismatch unless rep has one s x s matrix pair per frame element.
void validate_shape(const FrameAlgebroid& a, const Representation& rep);

/// rho(x)u = a(x)(u) + sum_i x_i rho_i u.
Section rho_act(const FrameAlgebroid& a, const Representation& rep, const Section& x,
                const Section& u);
/// mu(x)u = sum_i x_i mu_i u.
Section mu_act(const Representation& rep, const Section& x, const Section& u);
/// Matrix of the tensorial map u -> sum_i x_i M_i u.
PolyMatrix contract(const std::vector<PolyMatrix>& ms, const Section& x, std::size_t nvars);

/// Left multiplication representation (A; L, 0) of the sub-adjacent Lie algebroid:
/// rho[i](k, j) is the k-th component of e_i . e_j. Throws NotLeftSymmetric.
Representation build_left_mult_rep(const LSAlgebroid& a);

/// rho([e_i,e_j]) = [rho(e_i), rho(e_j)] as first-order operators on E.
Report representation_lie_report(const LieAlgebroid& l, const Representation& rep);
bool check_representation_lie(const LieAlgebroid& l, const Representation& rep);

/// Dual on E*: matrix parts -rho^T and -mu^T. Throws NotARepresentation.
Representation dual_rep(const LieAlgebroid& l, const Representation& rep);
/// Pointwise transpose-negation without validation.
Representation dual_matrices(const Representation& rep);

/// rho is a representation of the sub-adjacent Lie algebroid and
/// rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x) on frames.
Report representation_lsa_report(const LSAlgebroid& a, const Representation& rep);
bool check_representation_lsa(const LSAlgebroid& a, const Representation& rep);

struct DerivedReps {
  /// (E; rho - mu, 0)
  Representation rep1;
  /// (E*; rho* - mu*, -mu*)
  Representation rep2;
  /// (E; rho - mu, -mu) is a representation; (E*; rho*, mu*) is a representation;
  /// mu(x)mu(y) = mu(y)mu(x).
  bool minus_mu_rep = false;
  bool dual_rep = false;
  bool mu_commutes = false;
  Report report;
};

/// Throws NotARepresentation unless rep passes check_representation_lsa.
DerivedReps derived_reps(const LSAlgebroid& a, const Representation& rep);

}  // namespace lsakit
