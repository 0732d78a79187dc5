#include "lsakit/phase_space.hpp"

#include "lsakit/constructions.hpp"
#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

/// e1..er, eps1..epsr
std::string phase_name(std::size_t a, std::size_t r) {
  return a < r ? "e" + idx(a) : "eps" + idx(a - r);
}

Poly bilinear(const PolyMatrix& b, const Section& u, const Section& v) {
  const Section bv = b.apply(v);
  Poly out(b.nvars());
  for (std::size_t k = 0; k < u.rank(); ++k) {
    if (!u[k].is_zero() && !bv[k].is_zero()) out += u[k] * bv[k];
  }
  return out;
}

std::vector<std::string> nonzero_components(const FormCochain& w,
                                            const std::vector<std::string>& coords,
                                            std::size_t r) {
  std::vector<std::string> out;
  for (const auto& [t, v] : w.components()) {
    std::string label = "(";
    for (std::size_t k = 0; k < t.size(); ++k) label += (k ? "," : "") + phase_name(t[k], r);
    label += ")";
    out.push_back(format_witness("d omega" + label, v.to_string(coords), "0"));
  }
  return out;
}

}  // namespace

FormCochain canonical_omega(std::size_t r, std::size_t nvars) {
  FormCochain w(2 * r, 2, nvars);
  for (std::size_t i = 0; i < r; ++i) w.set({i, r + i}, Poly::constant(nvars, 1));
  return w;
}

PolyMatrix form_matrix(const FormCochain& w) {
  if (w.degree() != 2) throw Error(Errc::InvalidDegree, "Gram matrix of a non-2-form");
  PolyMatrix m(w.rank(), w.rank(), w.nvars());
  for (std::size_t a = 0; a < w.rank(); ++a) {
    for (std::size_t b = 0; b < w.rank(); ++b) m(a, b) = w.at({a, b});
  }
  return m;
}

PolyMatrix canonical_paracomplex(std::size_t r, std::size_t nvars) {
  std::vector<Poly> diag;
  for (std::size_t i = 0; i < 2 * r; ++i) diag.push_back(Poly::constant(nvars, i < r ? 1 : -1));
  return PolyMatrix::diagonal(diag);
}

PhaseSpace build_phase_space(const LSAlgebroid& a) {
  const LieAlgebroid g = sub_adjacent(a);
  const Representation l = build_left_mult_rep(a);
  PhaseSpace out{semidirect_lie_unchecked(g, dual_matrices(l)), canonical_omega(a.rank(), a.nvars()),
                 Report()};
  const FormCochain dw = lie_form_d(out.P, out.omega);
  out.report.add("closed", "d omega = 0 on all frame triples of A (+) A*",
                 nonzero_components(dw, a.coords(), a.rank()));
  const Poly det = form_matrix(out.omega).determinant();
  std::vector<std::string> nd;
  if (!det.is_constant() || det.is_zero()) {
    nd.push_back(format_witness("det omega", det.to_string(a.coords()), "nonzero constant"));
  }
  out.report.add("nondegenerate", "the Gram matrix of omega has constant nonzero determinant",
                 std::move(nd));
  return out;
}

PhaseLSA lsa_from_phase(const LieAlgebroid& l, const Representation& rep) {
  if (rep.rank != l.rank()) {
    throw Error(Errc::DimensionMismatch, "representation must act on the algebroid itself");
  }
  const Report lie = representation_lie_report(l, rep);
  if (!lie.passed()) throw Error(Errc::NotARepresentation, "rho is not a representation");
  const std::size_t r = l.rank();
  const LieAlgebroid p = semidirect_lie_unchecked(l, dual_matrices(rep));
  const FormCochain dw = lie_form_d(p, canonical_omega(r, l.nvars()));
  if (!dw.is_zero()) {
    throw Error(Errc::OmegaNotClosed, nonzero_components(dw, l.coords(), r).front());
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Section rhs = rep.rho[i].column(j) - rep.rho[j].column(i);
      if (!(l.bracket(i, j) == rhs)) {
        throw Error(Errc::IncompatibleBracket,
                    format_witness("[e" + idx(i) + ",e" + idx(j) + "] vs rho(e" + idx(i) + ")e" +
                                       idx(j) + " - rho(e" + idx(j) + ")e" + idx(i),
                                   l.bracket(i, j).to_string(l.coords()), rhs.to_string(l.coords())));
      }
    }
  }
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) table[i][j] = rep.rho[i].column(j);
  }
  PhaseLSA out;
  out.lsa = LSAlgebroid(l.coords(), std::move(table), l.anchors());
  Representation dual = dual_matrices(rep);
  for (auto& m : dual.mu) m = PolyMatrix(r, r, l.nvars());
  out.phase_product = semidirect_lsa_unchecked(out.lsa, dual);

  out.report.append(check_left_symmetric(out.lsa), "lsa/");
  std::vector<std::string> sub;
  const LieAlgebroid g = commutator_algebroid(out.lsa);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      if (!(g.bracket(i, j) == l.bracket(i, j))) {
        sub.push_back(format_witness("[e" + idx(i) + ",e" + idx(j) + "]",
                                     g.bracket(i, j).to_string(l.coords()),
                                     l.bracket(i, j).to_string(l.coords())));
      }
    }
  }
  out.report.add("sub-adjacent", "x.y - y.x = [x,y] on frame pairs", std::move(sub));
  out.report.append(check_left_symmetric(out.phase_product), "phase-product/");
  std::vector<std::string> comp;
  const LieAlgebroid gp = commutator_algebroid(out.phase_product);
  for (std::size_t a = 0; a < 2 * r; ++a) {
    for (std::size_t b = a + 1; b < 2 * r; ++b) {
      if (!(gp.bracket(a, b) == p.bracket(a, b))) {
        comp.push_back(format_witness("[" + phase_name(a, r) + "," + phase_name(b, r) + "]",
                                      gp.bracket(a, b).to_string(l.coords()),
                                      p.bracket(a, b).to_string(l.coords())));
      }
    }
  }
  out.compatible = comp.empty();
  out.report.add("compatible", "the commutator of the product on A (+) A* is the phase bracket",
                 std::move(comp));
  return out;
}

std::optional<bool> constant_positive_definite(const PolyMatrix& b) {
  if (!b.is_constant() || !b.is_square()) return std::nullopt;
  for (std::size_t k = 1; k <= b.rows(); ++k) {
    PolyMatrix minor(k, k, b.nvars());
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = b(i, j);
    }
    if (sgn(minor.determinant().constant_term()) <= 0) return false;
  }
  return true;
}

QuadraticReport quadratic_report(const LSAlgebroid& a, const PolyMatrix& b) {
  const std::size_t r = a.rank();
  if (b.rows() != r || b.cols() != r) {
    throw Error(Errc::DimensionMismatch, "bilinear form must be " + std::to_string(r) + "x" +
                                             std::to_string(r));
  }
  if (!b.is_symmetric()) throw Error(Errc::NotQuadratic, "bilinear form is not symmetric");
  const Poly det = b.determinant();
  if (!det.is_constant()) {
    throw Error(Errc::NonConstantDeterminant,
                "nondegeneracy of B cannot be certified: det(B) = " + det.to_string(a.coords()));
  }
  QuadraticReport out;
  std::vector<std::string> inv;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = j; k < r; ++k) {
        const Section x = a.basis(i), y = a.basis(j), z = a.basis(k);
        const Poly lhs = bilinear(b, section_mult(a, x, y), z) + bilinear(b, y, section_mult(a, x, z));
        const Poly rhs = a.anchor(i).apply(b(j, k));
        if (!(lhs == rhs)) {
          inv.push_back(format_witness("(e" + idx(i) + ".e" + idx(j) + ",e" + idx(k) + ") + (e" +
                                           idx(j) + ",e" + idx(i) + ".e" + idx(k) + ")",
                                       lhs.to_string(a.coords()), rhs.to_string(a.coords())));
        }
      }
    }
  }
  const bool invariant = inv.empty();
  out.report.add("invariance", "(x.y,z) + (y,x.z) = a(x)(y,z) on frame triples", std::move(inv));
  std::vector<std::string> nd;
  if (det.is_zero()) nd.push_back(format_witness("det B", "0", "nonzero constant"));
  out.report.add("nondegenerate", "det(B) is a nonzero constant", std::move(nd));
  out.quadratic = invariant && !det.is_zero();

  out.positive_definite = constant_positive_definite(b);
  if (!out.positive_definite) {
    CheckRecord rec{"riemannian", "B is positive definite", Status::Uncertified,
                    {"B is not constant; positivity is not certified"}};
    out.report.add(std::move(rec));
  } else if (*out.positive_definite) {
    out.report.add("riemannian", "B is positive definite (leading principal minors)", {});
  }
  return out;
}

bool check_quadratic(const LSAlgebroid& a, const PolyMatrix& b) {
  return quadratic_report(a, b).quadratic;
}

Report quadratic_kernel_report(const LSAlgebroid& a, const PolyMatrix& b,
                               const std::vector<Section>& kernel_frame) {
  if (!quadratic_report(a, b).quadratic) {
    throw Error(Errc::NotQuadratic, "B is not a nondegenerate invariant form");
  }
  for (std::size_t p = 0; p < kernel_frame.size(); ++p) {
    if (kernel_frame[p].rank() != a.rank()) {
      throw Error(Errc::DimensionMismatch, "kernel frame section of wrong rank");
    }
    const VectorField ak = a.anchor_of(kernel_frame[p]);
    if (!ak.is_zero()) {
      throw Error(Errc::FrameNotInKernel, "a(k" + idx(p) + ") = " + ak.to_string(a.coords()));
    }
  }
  Report report;
  const LieAlgebroid g = commutator_algebroid(a);
  std::vector<std::string> sym;
  std::vector<std::string> ad;
  const std::size_t m = kernel_frame.size();
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q = p; q < m; ++q) {
      const Section& kp = kernel_frame[p];
      const Section& kq = kernel_frame[q];
      const Section s = section_mult(a, kp, kq) + section_mult(a, kq, kp);
      if (!s.is_zero()) {
        sym.push_back(format_witness("k" + idx(p) + ".k" + idx(q) + " + k" + idx(q) + ".k" + idx(p),
                                     s.to_string(a.coords()), "0"));
      }
      for (std::size_t i = 0; i < a.rank(); ++i) {
        const Section x = a.basis(i);
        const Poly lhs = a.anchor(i).apply(bilinear(b, kp, kq));
        const Poly rhs = bilinear(b, lie_bracket(g, x, kp), kq) + bilinear(b, kp, lie_bracket(g, x, kq));
        if (!(lhs == rhs)) {
          ad.push_back(format_witness("a(e" + idx(i) + ")(k" + idx(p) + ",k" + idx(q) + ")",
                                      lhs.to_string(a.coords()), rhs.to_string(a.coords())));
        }
      }
    }
  }
  report.add("kernel-symmetric", "x.y + y.x = 0 for x, y in the kernel frame", std::move(sym));
  report.add("ad-invariant", "a(x)(r,s) = ([x,r],s) + (r,[x,s]) for r, s in the kernel frame",
             std::move(ad));
  return report;
}

bool quadratic_kernel_descend(const LSAlgebroid& a, const PolyMatrix& b,
                              const std::vector<Section>& kernel_frame) {
  return quadratic_kernel_report(a, b, kernel_frame).passed();
}

ComplexStructure build_complex_structure(const LSAlgebroid& a, const PolyMatrix& b) {
  const QuadraticReport q = quadratic_report(a, b);
  if (!q.quadratic) throw Error(Errc::NotQuadratic, "B is not a nondegenerate invariant form");
  const std::size_t r = a.rank();
  const std::size_t nv = a.nvars();
  const PolyMatrix binv = matrix_inverse_adjugate(b);
  ComplexStructure out;
  out.J = PolyMatrix::blocks(PolyMatrix(r, r, nv), -binv, b, PolyMatrix(r, r, nv));
  const PhaseSpace ps = build_phase_space(a);
  out.report.append(complex_structure_report(ps.P, out.J), "complex/");

  const PolyMatrix p = canonical_paracomplex(r, nv);
  out.report.append(paracomplex_report(ps.P, p), "paracomplex/");
  std::vector<std::string> anti;
  const PolyMatrix jp = out.J * p;
  const PolyMatrix pj = -(p * out.J);
  if (!(jp == pj)) anti.push_back(format_witness("JP", jp.to_string(a.coords()), pj.to_string(a.coords())));
  out.report.add("complex-product", "JP = -PJ", std::move(anti));

  std::vector<std::string> compat;
  for (std::size_t u = 0; u < 2 * r; ++u) {
    for (std::size_t v = u + 1; v < 2 * r; ++v) {
      const Section ju = out.J.column(u), jv = out.J.column(v);
      const std::vector<Section> args{ju, jv};
      const Poly lhs = ps.omega.evaluate(args);
      const Poly rhs = ps.omega.at({u, v});
      if (!(lhs == rhs)) {
        compat.push_back(format_witness("omega(J" + phase_name(u, r) + ",J" + phase_name(v, r) + ")",
                                        lhs.to_string(a.coords()), rhs.to_string(a.coords())));
      }
    }
  }
  out.report.add("kahler-compatible", "omega(Ju,Jv) = omega(u,v) on frame pairs", std::move(compat));

  // omega(u, Ju) = x^T B x + xi^T B^-1 xi for u = x + xi.
  // Indefinite constant B admits isotropic x, so positivity does not apply there.
  if (!q.positive_definite) {
    out.report.add(CheckRecord{"kahler-positive", "omega(u,Ju) != 0 for u != 0",
                               Status::Uncertified,
                               {"B is not constant; condition not certified"}});
  } else if (*q.positive_definite) {
    out.report.add("kahler-positive", "omega(u,Ju) != 0 for u != 0 (B positive definite)", {});
  }
  return out;
}

PhaseIsomorphism phase_iso_from_lsa_iso(const LSAlgebroid& a1, const LSAlgebroid& a2,
                                        const PolyMatrix& phi) {
  if (a1.rank() != a2.rank() || a1.nvars() != a2.nvars()) {
    throw Error(Errc::NotIsomorphism, "algebroids of different rank or base");
  }
  const Report hom = lsa_homomorphism_report(a1, a2, phi);
  if (!hom.passed()) {
    for (const auto& rec : hom.records()) {
      if (rec.status == Status::Fail) {
        throw Error(Errc::NotIsomorphism, rec.name + ": " + rec.witnesses.front());
      }
    }
  }
  const std::size_t r = a1.rank();
  const std::size_t nv = a1.nvars();
  PolyMatrix inv_t;
  try {
    inv_t = matrix_inverse_adjugate(phi.transpose());
  } catch (const Error& e) {
    if (e.code() == Errc::SingularMatrix) throw Error(Errc::NotIsomorphism, "phi is singular");
    throw;
  }
  PhaseIsomorphism out;
  out.Phi = PolyMatrix::blocks(phi, PolyMatrix(r, r, nv), PolyMatrix(r, r, nv), inv_t);
  const PhaseSpace p1 = build_phase_space(a1);
  const PhaseSpace p2 = build_phase_space(a2);
  out.report.append(lie_homomorphism_report(p1.P, p2.P, out.Phi), "morphism/");

  std::vector<std::string> blocks;
  for (std::size_t c = 0; c < 2 * r; ++c) {
    const Section img = out.Phi.column(c);
    for (std::size_t k = 0; k < 2 * r; ++k) {
      const bool same_half = (c < r) == (k < r);
      if (!same_half && !img[k].is_zero()) {
        blocks.push_back(format_witness("Phi(" + phase_name(c, r) + ")", img.to_string(a1.coords()),
                                        c < r ? "section of A2" : "section of A2*"));
        break;
      }
    }
  }
  out.report.add("preserves-splitting", "Phi(A1) = A2 and Phi(A1*) = A2*", std::move(blocks));

  std::vector<std::string> sympl;
  for (std::size_t u = 0; u < 2 * r; ++u) {
    for (std::size_t v = u + 1; v < 2 * r; ++v) {
      const std::vector<Section> args{out.Phi.column(u), out.Phi.column(v)};
      const Poly lhs = p1.omega.at({u, v});
      const Poly rhs = p2.omega.evaluate(args);
      if (!(lhs == rhs)) {
        sympl.push_back(format_witness("omega(" + phase_name(u, r) + "," + phase_name(v, r) + ")",
                                       lhs.to_string(a1.coords()), rhs.to_string(a1.coords())));
      }
    }
  }
  out.report.add("symplectic", "omega1(u,v) = omega2(Phi u, Phi v) on frame pairs", std::move(sympl));
  return out;
}

}  // namespace lsakit
