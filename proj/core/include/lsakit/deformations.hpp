#pragma once

#include <string>

#include "lsakit/algebroid.hpp"
#include "lsakit/cohomology.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/report.hpp"

namespace lsakit {

/// Records for a degree-2 multiderivation w to generate x ._t y = x.y + t w(x,y),
/// a_t = a + t sigma_w:
///   closed          d_def w = 0 (values and symbols)
///   2-closed        x.w(y,z) - y.w(x,z) + w(y,x).z - w(x,y).z
///                     = w(y,x.z) - w(x,y.z) + w([x,y],z) on frame triples
///   omega-bracket   w(w(x,y),z) - w(x,w(y,z)) = w(w(y,x),z) - w(y,w(x,z))
///   auxiliary/...   (A, w, sigma_w) passes check_left_symmetric
/// Throws InvalidDegree unless w has degree 2, DimensionMismatch on a foreign bundle.
Report check_deformation(const LSAlgebroid& a, const MultiDerivation& w);

/// A_t at a rational value of t. Throws NotADeformation.
LSAlgebroid deformed_algebroid(const LSAlgebroid& a, const MultiDerivation& w, const Rational& t);
/// A_t over the coordinate ring extended by a formal parameter (appended last, named
/// "t" unless taken). Throws NotADeformation.
LSAlgebroid deformed_algebroid_formal(const LSAlgebroid& a, const MultiDerivation& w);
/// Same without validation.
LSAlgebroid deformed_algebroid_unchecked(const LSAlgebroid& a, const MultiDerivation& w,
                                         const Rational& t);
LSAlgebroid deformed_algebroid_formal_unchecked(const LSAlgebroid& a, const MultiDerivation& w);

/// Name of the formal parameter appended to the given coordinates.
std::string parameter_name(const std::vector<std::string>& coords);

/// N(x).N(y) - N(x.N(y)) - N(N(x).y) + N^2(x.y) = 0 on frame pairs. With
/// paper_literal, also records the variant N(x).N(y) - x.N(y) - N(x).y + N^2(x.y) = 0.
Report nijenhuis_report(const LSAlgebroid& a, const PolyMatrix& n, bool paper_literal = false);
/// Verdict of the tensorial condition only. Throws DimensionMismatch.
bool check_nijenhuis(const LSAlgebroid& a, const PolyMatrix& n);

struct TrivialDeformation {
  /// d_def N: w(x,y) = x.N(y) + N(x).y - N(x.y), sigma_w = a o N.
  MultiDerivation omega;
  /// A_t over the extended ring.
  LSAlgebroid formal;
  /// deformation/..., formal-lsa/..., intertwining/... ((Id + tN): A_t -> A), lie-nijenhuis/...
  Report report;
};

/// Throws NotNijenhuis.
TrivialDeformation trivial_deformation(const LSAlgebroid& a, const PolyMatrix& n);

/// Id + tN maps A_t (from w) onto A'_t (from w') when
///   2-exact          w - w' = d_def N on frame pairs
///   2-exact-symbol   sigma_w - sigma_w' = sigma of d_def N
///   integral-1       N w(x,y) = w'(x,Ny) + w'(Nx,y) + Nx.Ny
///   image-vanishing  w'(Nx,Ny) = 0
///   symbol-image     sigma_w'(Nx) = 0
///   anchor-relation  sigma_w - sigma_w' = a o N
Report check_equivalence(const LSAlgebroid& a, const MultiDerivation& w,
                         const MultiDerivation& w_prime, const PolyMatrix& n);

}  // namespace lsakit
