#pragma once

#include <optional>
#include <vector>

#include "lsakit/algebroid.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/report.hpp"
#include "lsakit/representation.hpp"

namespace lsakit {

struct PhaseSpace {
  /// G(A) semidirect L* on A (+) A*, frame e_1..e_r, eps_1..eps_r.
  LieAlgebroid P;
  /// omega(x + xi, y + eta) = <eta, x> - <xi, y>.
  FormCochain omega;
  /// Closedness d omega = 0 and nondegeneracy.
  Report report;
};

/// Throws NotLeftSymmetric.
PhaseSpace build_phase_space(const LSAlgebroid& a);

/// Canonical pairing 2-form on a rank 2r bundle.
FormCochain canonical_omega(std::size_t r, std::size_t nvars);
/// Gram matrix W(a, b) = w(e_a, e_b) of a 2-form.
PolyMatrix form_matrix(const FormCochain& w);
/// diag(id_r, -id_r): P(x + xi) = x - xi.
PolyMatrix canonical_paracomplex(std::size_t r, std::size_t nvars);

struct PhaseLSA {
  /// x . y = rho(x) y.
  LSAlgebroid lsa;
  /// x * y = x . y, x * xi = L*_x xi, xi * x = 0, xi * eta = 0, anchor a(x).
  LSAlgebroid phase_product;
  bool compatible = false;
  Report report;
};

/// Left-symmetric structure recovered from a representation of L on itself whose
/// semidirect product with the dual makes the canonical 2-form closed.
/// Throws NotARepresentation, OmegaNotClosed (failing triple) or IncompatibleBracket.
PhaseLSA lsa_from_phase(const LieAlgebroid& l, const Representation& rep);

/// Leading-principal-minor test of a constant symmetric matrix; nullopt when the matrix
/// is not constant.
std::optional<bool> constant_positive_definite(const PolyMatrix& b);

struct QuadraticReport {
  /// Invariance holds and det(B) is a nonzero constant.
  bool quadratic = false;
  /// Riemannian certificate: set only for constant B.
  std::optional<bool> positive_definite;
  Report report;
};

/// (x.y, z) + (y, x.z) = a(x)(y, z) on frame triples and det(B) a nonzero constant.
/// Throws DimensionMismatch, NotQuadratic (B not symmetric), NonConstantDeterminant.
QuadraticReport quadratic_report(const LSAlgebroid& a, const PolyMatrix& b);
bool check_quadratic(const LSAlgebroid& a, const PolyMatrix& b);

/// x.y + y.x = 0 on the kernel frame and ad-invariance of B restricted to K.
/// Throws NotQuadratic, FrameNotInKernel.
Report quadratic_kernel_report(const LSAlgebroid& a, const PolyMatrix& b,
                               const std::vector<Section>& kernel_frame);
bool quadratic_kernel_descend(const LSAlgebroid& a, const PolyMatrix& b,
                              const std::vector<Section>& kernel_frame);

struct ComplexStructure {
  /// [[0, -B^-1], [B, 0]] on the phase space.
  PolyMatrix J;
  Report report;
};

/// Throws NotQuadratic, NonConstantDeterminant.
ComplexStructure build_complex_structure(const LSAlgebroid& a, const PolyMatrix& b);

struct PhaseIsomorphism {
  /// block-diag(phi, (phi^T)^-1).
  PolyMatrix Phi;
  Report report;
};

/// Throws NotIsomorphism (phi not an invertible homomorphism), NonConstantDeterminant.
PhaseIsomorphism phase_iso_from_lsa_iso(const LSAlgebroid& a1, const LSAlgebroid& a2,
                                        const PolyMatrix& phi);

}  // namespace lsakit
