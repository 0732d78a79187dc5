#include "lsakit/constructions.hpp"

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

std::string pair_label(const char* frame, std::size_t i, std::size_t j) {
  return std::string("(") + frame + idx(i) + "," + frame + idx(j) + ")";
}

void require_square(const PolyMatrix& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " must be " + std::to_string(n) +
                                             "x" + std::to_string(n));
  }
}

}  // namespace

LSAlgebroid action_algebroid(const LSAlgebroid& g, const std::vector<VectorField>& fields,
                             const std::vector<std::string>& coords) {
  if (!g.is_point()) throw Error(Errc::NotPointCase, "action algebroids start from a point algebra");
  const std::size_t r = g.rank();
  const std::size_t n = coords.size();
  if (fields.size() != r) {
    throw Error(Errc::DimensionMismatch, "need one vector field per basis element of g");
  }
  for (const auto& f : fields) {
    if (f.dim() != n) throw Error(Errc::DimensionMismatch, "action field has wrong dimension");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const Section comm = g.product(i, j) - g.product(j, i);
      VectorField lhs = VectorField::zero(n);
      for (std::size_t k = 0; k < r; ++k) {
        if (!comm[k].is_zero()) lhs += comm[k].extended(n) * fields[k];
      }
      const VectorField rhs = vf_bracket(fields[i], fields[j]);
      if (!(lhs == rhs)) {
        throw Error(Errc::NotAnAction,
                    format_witness("rho(e" + idx(i) + ".e" + idx(j) + " - e" + idx(j) + ".e" +
                                       idx(i) + ") vs [rho(e" + idx(i) + "),rho(e" + idx(j) + ")]",
                                   lhs.to_string(coords), rhs.to_string(coords)));
      }
    }
  }
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Poly> comps;
      for (const auto& p : g.product(i, j).components()) comps.push_back(p.extended(n));
      table[i][j] = Section(std::move(comps));
    }
  }
  return LSAlgebroid(coords, std::move(table), fields);
}

Report lie_homomorphism_report(const LieAlgebroid& l1, const LieAlgebroid& l2,
                               const PolyMatrix& t) {
  if (l1.nvars() != l2.nvars()) {
    throw Error(Errc::DimensionMismatch, "morphism between different base charts");
  }
  if (t.rows() != l2.rank() || t.cols() != l1.rank()) {
    throw Error(Errc::DimensionMismatch, "map must be " + std::to_string(l2.rank()) + "x" +
                                             std::to_string(l1.rank()));
  }
  Report report;
  std::vector<Section> images;
  for (std::size_t i = 0; i < l1.rank(); ++i) images.push_back(t.column(i));
  std::vector<std::string> bracket;
  for (std::size_t i = 0; i < l1.rank(); ++i) {
    for (std::size_t j = i + 1; j < l1.rank(); ++j) {
      const Section lhs = t.apply(l1.bracket(i, j));
      const Section rhs = lie_bracket(l2, images[i], images[j]);
      if (!(lhs == rhs)) {
        bracket.push_back(format_witness("T[e" + idx(i) + ",e" + idx(j) + "]",
                                         lhs.to_string(l2.coords()), rhs.to_string(l2.coords())));
      }
    }
  }
  report.add("bracket", "T[x,y] = [Tx,Ty] on frame pairs", std::move(bracket));
  std::vector<std::string> anchor;
  for (std::size_t i = 0; i < l1.rank(); ++i) {
    const VectorField lhs = l2.anchor_of(images[i]);
    if (!(lhs == l1.anchor(i))) {
      anchor.push_back(format_witness("a(T e" + idx(i) + ")", lhs.to_string(l2.coords()),
                                      l1.anchor(i).to_string(l1.coords())));
    }
  }
  report.add("anchor", "a2(Tx) = a1(x) on the frame", std::move(anchor));
  return report;
}

OOperatorResult apply_O_operator(const LieAlgebroid& l, const Representation& rep,
                                 const PolyMatrix& t) {
  validate_shape(l, rep);
  const std::size_t r = l.rank();
  const std::size_t s = rep.rank;
  if (t.rows() != r || t.cols() != s) {
    throw Error(Errc::DimensionMismatch,
                "O-operator must be " + std::to_string(r) + "x" + std::to_string(s));
  }
  OOperatorResult out;
  std::vector<Section> tu;
  std::vector<Section> eps;
  for (std::size_t p = 0; p < s; ++p) {
    tu.push_back(t.column(p));
    eps.push_back(Section::basis(s, p, l.nvars()));
  }
  std::vector<std::string> wit;
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = p + 1; q < s; ++q) {
      const Section lhs = lie_bracket(l, tu[p], tu[q]);
      const Section rhs =
          t.apply(rho_act(l, rep, tu[p], eps[q]) - rho_act(l, rep, tu[q], eps[p]));
      if (!(lhs == rhs)) {
        wit.push_back(format_witness("[Tu" + idx(p) + ",Tu" + idx(q) + "]",
                                     lhs.to_string(l.coords()), rhs.to_string(l.coords())));
      }
    }
  }
  out.is_O = wit.empty();
  out.report.add("o-operator", "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u) on frame pairs of E",
                 std::move(wit));

  std::vector<std::vector<Section>> table(s, std::vector<Section>(s));
  std::vector<VectorField> anchor;
  for (std::size_t p = 0; p < s; ++p) {
    for (std::size_t q = 0; q < s; ++q) table[p][q] = rho_act(l, rep, tu[p], eps[q]);
    anchor.push_back(l.anchor_of(tu[p]));
  }
  out.induced = LSAlgebroid(l.coords(), std::move(table), std::move(anchor));
  if (!out.is_O) return out;

  out.report.append(check_left_symmetric(out.induced), "induced/");
  const Report hom = lie_homomorphism_report(commutator_algebroid(out.induced), l, t);
  out.T_homomorphism = hom.passed();
  out.report.append(hom, "homomorphism/");
  return out;
}

PolyMatrix o_operator_lift(const PolyMatrix& t) {
  const std::size_t r = t.rows();
  const std::size_t s = t.cols();
  const std::size_t nv = t.nvars();
  return PolyMatrix::blocks(PolyMatrix(r, r, nv), t, PolyMatrix(s, r, nv), PolyMatrix(s, s, nv));
}

Report lie_nijenhuis_report(const LieAlgebroid& l, const PolyMatrix& n) {
  require_square(n, l.rank(), "Nijenhuis operator");
  Report report;
  std::vector<std::string> wit;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = i + 1; j < l.rank(); ++j) {
      const Section x = l.basis(i), y = l.basis(j);
      const Section nx = n.apply(x), ny = n.apply(y);
      const Section lhs = lie_bracket(l, nx, ny);
      const Section rhs = n.apply(lie_bracket(l, nx, y) + lie_bracket(l, x, ny) -
                                  n.apply(lie_bracket(l, x, y)));
      if (!(lhs == rhs)) {
        wit.push_back(format_witness("[Ne" + idx(i) + ",Ne" + idx(j) + "]",
                                     lhs.to_string(l.coords()), rhs.to_string(l.coords())));
      }
    }
  }
  report.add("lie-nijenhuis", "[Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y]) on frame pairs",
             std::move(wit));
  return report;
}

bool check_lie_nijenhuis(const LieAlgebroid& l, const PolyMatrix& n) {
  return lie_nijenhuis_report(l, n).passed();
}

LieAlgebroid semidirect_lie_unchecked(const LieAlgebroid& l, const Representation& rep) {
  validate_shape(l, rep);
  const std::size_t r = l.rank();
  const std::size_t s = rep.rank;
  const std::size_t nv = l.nvars();
  const Section zr = Section::zero(r, nv);
  const Section zs = Section::zero(s, nv);
  std::vector<std::vector<Section>> table(r + s, std::vector<Section>(r + s, Section::zero(r + s, nv)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) table[i][j] = concat(l.bracket(i, j), zs);
    for (std::size_t q = 0; q < s; ++q) {
      const Section v = concat(zr, rep.rho[i].column(q));
      table[i][r + q] = v;
      table[r + q][i] = -v;
    }
  }
  std::vector<VectorField> anchor = l.anchors();
  for (std::size_t q = 0; q < s; ++q) anchor.push_back(VectorField::zero(nv));
  return LieAlgebroid(l.coords(), std::move(table), std::move(anchor));
}

LieAlgebroid semidirect_lie(const LieAlgebroid& l, const Representation& rep) {
  const Report report = representation_lie_report(l, rep);
  if (!report.passed()) {
    throw Error(Errc::NotARepresentation, "semidirect product needs a representation");
  }
  return semidirect_lie_unchecked(l, rep);
}

LSAlgebroid semidirect_lsa_unchecked(const LSAlgebroid& a, const Representation& rep) {
  validate_shape(a, rep);
  const std::size_t r = a.rank();
  const std::size_t s = rep.rank;
  const std::size_t nv = a.nvars();
  const Section zr = Section::zero(r, nv);
  const Section zs = Section::zero(s, nv);
  std::vector<std::vector<Section>> table(r + s, std::vector<Section>(r + s, Section::zero(r + s, nv)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) table[i][j] = concat(a.product(i, j), zs);
    for (std::size_t q = 0; q < s; ++q) {
      table[i][r + q] = concat(zr, rep.rho[i].column(q));
      table[r + q][i] = concat(zr, rep.mu[i].column(q));
    }
  }
  std::vector<VectorField> anchor = a.anchors();
  for (std::size_t q = 0; q < s; ++q) anchor.push_back(VectorField::zero(nv));
  return LSAlgebroid(a.coords(), std::move(table), std::move(anchor));
}

LSAlgebroid semidirect_lsa(const LSAlgebroid& a, const Representation& rep) {
  if (!check_representation_lsa(a, rep)) {
    throw Error(Errc::NotARepresentation, "semidirect product needs a representation");
  }
  return semidirect_lsa_unchecked(a, rep);
}

namespace {

Report integrability_report(const LieAlgebroid& l, const PolyMatrix& p, int square_sign,
                            const char* square_name, const char* statement) {
  require_square(p, l.rank(), "structure map");
  Report report;
  std::vector<std::string> sq;
  const PolyMatrix p2 = p * p;
  const PolyMatrix target = Rational(square_sign) * PolyMatrix::identity(l.rank(), l.nvars());
  if (!(p2 == target)) {
    sq.push_back(format_witness("square", p2.to_string(l.coords()), target.to_string(l.coords())));
  }
  report.add(square_name, square_sign > 0 ? "P^2 = id" : "J^2 = -id", std::move(sq));
  std::vector<std::string> wit;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = i + 1; j < l.rank(); ++j) {
      const Section x = l.basis(i), y = l.basis(j);
      const Section px = p.apply(x), py = p.apply(y);
      const Section lhs = p.apply(lie_bracket(l, x, y));
      const Section last = p.apply(lie_bracket(l, px, py));
      const Section rhs = lie_bracket(l, px, y) + lie_bracket(l, x, py) +
                          (square_sign > 0 ? -last : last);
      if (!(lhs == rhs)) {
        wit.push_back(format_witness(pair_label("e", i, j), lhs.to_string(l.coords()),
                                     rhs.to_string(l.coords())));
      }
    }
  }
  report.add("integrability", statement, std::move(wit));
  return report;
}

}  // namespace

Report paracomplex_report(const LieAlgebroid& l, const PolyMatrix& p) {
  return integrability_report(l, p, 1, "involution",
                              "P[x,y] = [Px,y] + [x,Py] - P[Px,Py] on frame pairs");
}

bool check_paracomplex(const LieAlgebroid& l, const PolyMatrix& p) {
  return paracomplex_report(l, p).passed();
}

Report complex_structure_report(const LieAlgebroid& l, const PolyMatrix& j) {
  return integrability_report(l, j, -1, "square",
                              "J[x,y] = [Jx,y] + [x,Jy] + J[Jx,Jy] on frame pairs");
}

SubbundleFrame::SubbundleFrame(std::vector<Section> frame) : frame_(std::move(frame)) {
  const std::size_t m = frame_.size();
  if (m == 0) return;
  const std::size_t r = frame_.front().rank();
  for (const auto& f : frame_) {
    if (f.rank() != r) throw Error(Errc::DimensionMismatch, "frame sections of mixed rank");
  }
  std::size_t nv = 0;
  for (const auto& f : frame_) {
    for (const auto& c : f.components()) nv = std::max(nv, c.nvars());
  }
  for (const auto& rows : increasing_tuples(r, m)) {
    PolyMatrix minor(m, m, nv);
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t p = 0; p < m; ++p) minor(a, p) = frame_[p][rows[a]].extended(nv);
    }
    const Poly det = minor.determinant();
    if (det.is_zero() || !det.is_constant()) continue;
    rows_ = rows;
    minor_inverse_ = matrix_inverse_adjugate(minor);
    return;
  }
  throw Error(Errc::FrameNotInKernel,
              "kernel frame does not span a polynomial subbundle (no maximal minor with constant "
              "nonzero determinant)");
}

std::optional<Section> SubbundleFrame::coordinates(const Section& s) const {
  const std::size_t m = frame_.size();
  if (m == 0) {
    if (s.is_zero()) return Section(std::vector<Poly>{});
    return std::nullopt;
  }
  std::vector<Poly> restricted;
  for (auto row : rows_) restricted.push_back(s[row]);
  Section coeffs = minor_inverse_.apply(Section(std::move(restricted)));
  if (!(combine(coeffs) == s)) return std::nullopt;
  return coeffs;
}

Section SubbundleFrame::combine(const Section& coeffs) const {
  Section out = Section::zero(frame_.empty() ? 0 : frame_.front().rank(), 0);
  for (std::size_t p = 0; p < frame_.size(); ++p) {
    if (!coeffs[p].is_zero()) out += coeffs[p] * frame_[p];
  }
  return out;
}

namespace {

/// Matrix whose column p holds the frame coordinates of op(k_p); throws `code` when an
/// image leaves the span.
template <class Op>
PolyMatrix frame_matrix(const LSAlgebroid& a, const SubbundleFrame& k, Op op, Errc code,
                        const std::string& what) {
  const std::size_t m = k.size();
  PolyMatrix out(m, m, a.nvars());
  for (std::size_t p = 0; p < m; ++p) {
    const Section img = op(k.frame()[p]);
    const auto coords = k.coordinates(img);
    if (!coords) {
      throw Error(code, what + "(k" + idx(p) + ") = " + img.to_string(a.coords()) +
                            " leaves the span of the kernel frame");
    }
    for (std::size_t q = 0; q < m; ++q) out(q, p) = (*coords)[q];
  }
  return out;
}

}  // namespace

Report kernel_representations(const LSAlgebroid& a, const std::vector<Section>& kernel_frame) {
  for (std::size_t p = 0; p < kernel_frame.size(); ++p) {
    if (kernel_frame[p].rank() != a.rank()) {
      throw Error(Errc::DimensionMismatch, "kernel frame section of wrong rank");
    }
    const VectorField ak = a.anchor_of(kernel_frame[p]);
    if (!ak.is_zero()) {
      throw Error(Errc::FrameNotInKernel, "a(k" + idx(p) + ") = " + ak.to_string(a.coords()));
    }
  }
  std::vector<Section> frame;
  for (const auto& k : kernel_frame) {
    std::vector<Poly> comps;
    for (const auto& c : k.components()) comps.push_back(c.extended(std::max(c.nvars(), a.nvars())));
    frame.emplace_back(std::move(comps));
  }
  const SubbundleFrame k(std::move(frame));
  const std::size_t m = k.size();
  const LieAlgebroid g = commutator_algebroid(a);
  Report report;

  Representation ad = Representation::zero(a.rank(), m, a.nvars());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const Section x = a.basis(i);
    ad.rho[i] = frame_matrix(
        a, k, [&](const Section& kp) { return lie_bracket(g, x, kp); }, Errc::FrameNotInKernel,
        "ad_e" + idx(i));
  }
  report.append(representation_lsa_report(a, ad), "(K;ad,0)/");
  report.append(representation_lsa_report(a, dual_matrices(ad)), "(K*;ad*,0)/");

  Representation lr = Representation::zero(a.rank(), m, a.nvars());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    const Section x = a.basis(i);
    lr.rho[i] = frame_matrix(
        a, k, [&](const Section& kp) { return section_mult(a, x, kp); }, Errc::NotAnIdeal,
        "L_e" + idx(i));
    lr.mu[i] = frame_matrix(
        a, k, [&](const Section& kp) { return section_mult(a, kp, x); }, Errc::NotAnIdeal,
        "R_e" + idx(i));
  }
  report.append(representation_lsa_report(a, lr), "(K;L,R)/");
  return report;
}

Report right_multiplication_report(const LSAlgebroid& a) {
  const std::size_t r = a.rank();
  Representation lr = Representation::zero(r, r, a.nvars());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        lr.rho[i](k, j) = a.product(i, j)[k];
        lr.mu[i](k, j) = a.product(j, i)[k];
      }
    }
  }
  Report report;
  // y.(f x) - f (y.x) = a(y)(f) x, so R is a bundle map only where the anchor vanishes.
  std::vector<std::string> wit;
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t mu = 0; mu < a.nvars(); ++mu) {
      if (a.anchor(j)[mu].is_zero()) continue;
      const Poly f = Poly::variable(a.nvars(), mu);
      const Section lhs = section_mult(a, a.basis(j), f * a.basis(0)) -
                          f * section_mult(a, a.basis(j), a.basis(0));
      wit.push_back(format_witness("R_{" + a.coords()[mu] + "*e1}(e" + idx(j) + ") - " +
                                       a.coords()[mu] + "*R_{e1}(e" + idx(j) + ")",
                                   lhs.to_string(a.coords()), "0"));
      break;
    }
  }
  report.add("tensorial", "R_{fx}(y) = f R_x(y) for the right multiplication R_x(y) = y.x",
             std::move(wit));
  report.append(representation_lsa_report(a, lr));
  return report;
}

}  // namespace lsakit
