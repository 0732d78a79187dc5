#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lsakit/algebroid.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/report.hpp"
#include "lsakit/representation.hpp"

namespace lsakit {

/// Action algebroid of a point algebra g along vector fields rho(e_i) on the chart:
/// c_ij is the constant section e_i . e_j and a(e_i) = fields[i]. Throws NotPointCase
/// for a non-point g and NotAnAction when rho(u.v - v.u) != [rho(u), rho(v)].
LSAlgebroid action_algebroid(const LSAlgebroid& g, const std::vector<VectorField>& fields,
                             const std::vector<std::string>& coords);

/// T[u,v]_1 = [Tu, Tv]_2 on frame pairs and a_2(Tu) = a_1(u). T is rank(L2) x rank(L1).
Report lie_homomorphism_report(const LieAlgebroid& l1, const LieAlgebroid& l2,
                               const PolyMatrix& t);

struct OOperatorResult {
  bool is_O = false;
  /// u . v = rho(Tu)v with anchor a o T.
  LSAlgebroid induced;
  /// T is a Lie algebroid morphism from the sub-adjacent of `induced` to L.
  bool T_homomorphism = false;
  Report report;
};

/// Tests [Tu,Tv] = T(rho(Tu)v - rho(Tv)u) on frame pairs of E; when it holds the
/// induced structure is built and verified. T is r x s.
OOperatorResult apply_O_operator(const LieAlgebroid& l, const Representation& rep,
                                 const PolyMatrix& t);

/// [[0, T], [0, 0]] acting on A (+) E.
PolyMatrix o_operator_lift(const PolyMatrix& t);

/// [Nx, Ny] = N([Nx, y] + [x, Ny] - N[x, y]) on frame pairs.
Report lie_nijenhuis_report(const LieAlgebroid& l, const PolyMatrix& n);
bool check_lie_nijenhuis(const LieAlgebroid& l, const PolyMatrix& n);

/// [x+u, y+v] = [x,y] + rho(x)v - rho(y)u with anchor a(x). Throws NotARepresentation.
LieAlgebroid semidirect_lie(const LieAlgebroid& l, const Representation& rep);
LieAlgebroid semidirect_lie_unchecked(const LieAlgebroid& l, const Representation& rep);

/// (x1+u1)*(x2+u2) = x1.x2 + rho(x1)u2 + mu(x2)u1 with anchor a(x).
/// Throws NotARepresentation.
LSAlgebroid semidirect_lsa(const LSAlgebroid& a, const Representation& rep);
LSAlgebroid semidirect_lsa_unchecked(const LSAlgebroid& a, const Representation& rep);

/// P^2 = id and P[x,y] = [Px,y] + [x,Py] - P[Px,Py] on frame pairs.
Report paracomplex_report(const LieAlgebroid& l, const PolyMatrix& p);
bool check_paracomplex(const LieAlgebroid& l, const PolyMatrix& p);

/// J^2 = -id and J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy] on frame pairs.
Report complex_structure_report(const LieAlgebroid& l, const PolyMatrix& j);

/// Builds and checks the representations on K = span(kernel_frame) of the
/// transitive examples: (K; ad, 0), (K*; ad*, 0), and (K; L, R) with R_x(y) = y.x.
/// Throws FrameNotInKernel when a(k) != 0 for a frame element or the frame does not
/// span a polynomial subbundle, NotAnIdeal when K is not a two-sided ideal.
Report kernel_representations(const LSAlgebroid& a, const std::vector<Section>& kernel_frame);

/// Whether (A; L, R) is a representation of A on itself. Right multiplication is
/// C-infinity-linear in x only where the anchor vanishes, which the first record tests.
Report right_multiplication_report(const LSAlgebroid& a);

/// Coordinates of sections of span(frame) in that frame. Built from an m x m minor
/// of the frame matrix with nonzero constant determinant.
class SubbundleFrame {
 public:
  /// Throws FrameNotInKernel when no such minor exists.
  explicit SubbundleFrame(std::vector<Section> frame);
  std::size_t size() const noexcept { return frame_.size(); }
  const std::vector<Section>& frame() const noexcept { return frame_; }
  /// Coefficients c with s = sum_p c_p frame[p], or nullopt when s escapes the span.
  std::optional<Section> coordinates(const Section& s) const;
  Section combine(const Section& coeffs) const;

 private:
  std::vector<Section> frame_;
  std::vector<std::size_t> rows_;
  PolyMatrix minor_inverse_;
};

}  // namespace lsakit
