#include "lsakit/deformations.hpp"

#include <algorithm>

#include "lsakit/constructions.hpp"
#include "lsakit/error.hpp"

namespace lsakit {

namespace {

void require_degree2(const LSAlgebroid& a, const MultiDerivation& w) {
  if (w.degree() != 2) {
    throw Error(Errc::InvalidDegree, "a deformation is a multiderivation of degree 2, got " +
                                         std::to_string(w.degree()));
  }
  if (w.rank() != a.rank() || w.nvars() != a.nvars()) {
    throw Error(Errc::DimensionMismatch, "deformation on a different algebroid");
  }
}

Section extend(const Section& s, std::size_t nvars) {
  std::vector<Poly> comps;
  comps.reserve(s.rank());
  for (const auto& p : s.components()) comps.push_back(p.extended(nvars));
  return Section(std::move(comps));
}

VectorField extend(const VectorField& v, std::size_t nvars) {
  std::vector<Poly> comps;
  for (const auto& p : v.components()) comps.push_back(p.extended(nvars));
  comps.resize(nvars, Poly(nvars));
  return VectorField(std::move(comps));
}

PolyMatrix extend(const PolyMatrix& m, std::size_t nvars) {
  PolyMatrix out(m.rows(), m.cols(), nvars);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).extended(nvars);
  }
  return out;
}

PolyMatrix require_endomorphism(const LSAlgebroid& a, const PolyMatrix& n) {
  if (n.rows() != a.rank() || n.cols() != a.rank()) {
    throw Error(Errc::DimensionMismatch, "endomorphism must be " + std::to_string(a.rank()) + "x" +
                                             std::to_string(a.rank()));
  }
  if (n.nvars() > a.nvars()) throw Error(Errc::DimensionMismatch, "endomorphism on another chart");
  return extend(n, a.nvars());
}

std::string pair_label(std::size_t i, std::size_t j) { return frame_label({i, j}); }

void require_deformation(const LSAlgebroid& a, const MultiDerivation& w) {
  const Report report = check_deformation(a, w);
  if (report.passed()) return;
  for (const auto& rec : report.records()) {
    if (rec.status == Status::Fail) {
      throw Error(Errc::NotADeformation, rec.name + " fails at " + rec.witnesses.front());
    }
  }
}

}  // namespace

Report check_deformation(const LSAlgebroid& a, const MultiDerivation& w) {
  require_degree2(a, w);
  const auto& coords = a.coords();
  const std::size_t r = a.rank();
  Report report;

  const MultiDerivation dw = def_d(a, w);
  std::vector<std::string> closed;
  for (const auto& [key, value] : dw.values()) {
    IndexTuple idx = key.first;
    idx.push_back(key.second);
    closed.push_back(format_witness("value " + frame_label(idx), value.to_string(coords), "0"));
  }
  for (const auto& [key, field] : dw.symbols()) {
    closed.push_back(format_witness("symbol " + frame_label(key), field.to_string(coords), "0"));
  }
  report.add("closed", "d_def w = 0", std::move(closed));

  auto ev = [&](const Section& x, const Section& y) {
    const Section args[] = {x, y};
    return w.evaluate(args);
  };
  auto mult = [&](const Section& x, const Section& y) { return section_mult(a, x, y); };

  std::vector<std::string> two_closed;
  std::vector<std::string> bracket;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const Section x = a.basis(i);
        const Section y = a.basis(j);
        const Section z = a.basis(k);
        const Section lhs = mult(x, ev(y, z)) - mult(y, ev(x, z)) + mult(ev(y, x), z) -
                            mult(ev(x, y), z);
        const Section rhs =
            ev(y, mult(x, z)) - ev(x, mult(y, z)) + ev(commutator_bracket(a, x, y), z);
        if (lhs != rhs) {
          two_closed.push_back(
              format_witness(frame_label({i, j, k}), lhs.to_string(coords), rhs.to_string(coords)));
        }
        const Section blhs = ev(ev(x, y), z) - ev(x, ev(y, z));
        const Section brhs = ev(ev(y, x), z) - ev(y, ev(x, z));
        if (blhs != brhs) {
          bracket.push_back(format_witness(frame_label({i, j, k}), blhs.to_string(coords),
                                           brhs.to_string(coords)));
        }
      }
    }
  }
  report.add("2-closed",
             "x.w(y,z) - y.w(x,z) + w(y,x).z - w(x,y).z = w(y,x.z) - w(x,y.z) + w([x,y],z)",
             std::move(two_closed));
  report.add("omega-bracket", "w(w(x,y),z) - w(x,w(y,z)) = w(w(y,x),z) - w(y,w(x,z))",
             std::move(bracket));

  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) table[i][j] = w.value_at({i}, j);
    anchor.push_back(w.symbol_at({i}));
  }
  report.append(check_left_symmetric(LSAlgebroid(coords, std::move(table), std::move(anchor))),
                "auxiliary/");
  return report;
}

LSAlgebroid deformed_algebroid_unchecked(const LSAlgebroid& a, const MultiDerivation& w,
                                         const Rational& t) {
  require_degree2(a, w);
  const std::size_t r = a.rank();
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) table[i][j] = a.product(i, j) + t * w.value_at({i}, j);
    anchor.push_back(a.anchor(i) + t * w.symbol_at({i}));
  }
  return LSAlgebroid(a.coords(), std::move(table), std::move(anchor));
}

std::string parameter_name(const std::vector<std::string>& coords) {
  std::string name = "t";
  for (int k = 1; std::find(coords.begin(), coords.end(), name) != coords.end(); ++k) {
    name = "t" + std::to_string(k);
  }
  return name;
}

LSAlgebroid deformed_algebroid_formal_unchecked(const LSAlgebroid& a, const MultiDerivation& w) {
  require_degree2(a, w);
  const LSAlgebroid ext = extend_with_parameter(a, parameter_name(a.coords()));
  const std::size_t n = ext.nvars();
  const Poly t = Poly::variable(n, n - 1);
  const std::size_t r = a.rank();
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      table[i][j] = ext.product(i, j) + t * extend(w.value_at({i}, j), n);
    }
    anchor.push_back(ext.anchor(i) + t * extend(w.symbol_at({i}), n));
  }
  return LSAlgebroid(ext.coords(), std::move(table), std::move(anchor));
}

LSAlgebroid deformed_algebroid(const LSAlgebroid& a, const MultiDerivation& w, const Rational& t) {
  require_deformation(a, w);
  return deformed_algebroid_unchecked(a, w, t);
}

LSAlgebroid deformed_algebroid_formal(const LSAlgebroid& a, const MultiDerivation& w) {
  require_deformation(a, w);
  return deformed_algebroid_formal_unchecked(a, w);
}

Report nijenhuis_report(const LSAlgebroid& a, const PolyMatrix& n_in, bool paper_literal) {
  const PolyMatrix n = require_endomorphism(a, n_in);
  const auto& coords = a.coords();
  std::vector<std::string> tensorial;
  std::vector<std::string> literal;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      const Section x = a.basis(i);
      const Section y = a.basis(j);
      const Section nx = n.apply(x);
      const Section ny = n.apply(y);
      const Section nn_xy = n.apply(n.apply(a.product(i, j)));
      const Section lhs = section_mult(a, nx, ny) + nn_xy;
      const Section rhs =
          n.apply(section_mult(a, x, ny)) + n.apply(section_mult(a, nx, y));
      if (lhs != rhs) {
        tensorial.push_back(
            format_witness(pair_label(i, j), lhs.to_string(coords), rhs.to_string(coords)));
      }
      if (paper_literal) {
        const Section lit_rhs = section_mult(a, x, ny) + section_mult(a, nx, y);
        if (lhs != lit_rhs) {
          literal.push_back(
              format_witness(pair_label(i, j), lhs.to_string(coords), lit_rhs.to_string(coords)));
        }
      }
    }
  }
  Report report;
  report.add("nijenhuis", "N(x).N(y) + N^2(x.y) = N(x.N(y)) + N(N(x).y)", std::move(tensorial));
  if (paper_literal) {
    report.add("nijenhuis-literal", "N(x).N(y) + N^2(x.y) = x.N(y) + N(x).y", std::move(literal));
  }
  return report;
}

bool check_nijenhuis(const LSAlgebroid& a, const PolyMatrix& n) {
  return nijenhuis_report(a, n).passed();
}

TrivialDeformation trivial_deformation(const LSAlgebroid& a, const PolyMatrix& n_in) {
  const PolyMatrix n = require_endomorphism(a, n_in);
  const Report nij = nijenhuis_report(a, n);
  if (!nij.passed()) {
    throw Error(Errc::NotNijenhuis, "Nijenhuis condition fails at " +
                                        nij.records().front().witnesses.front());
  }
  TrivialDeformation out;
  out.omega = def_d(a, MultiDerivation::bundle_map(n));
  out.formal = deformed_algebroid_formal_unchecked(a, out.omega);
  out.report.append(nij);
  out.report.append(check_deformation(a, out.omega), "deformation/");
  out.report.append(check_left_symmetric(out.formal), "formal-lsa/");

  const LSAlgebroid ext = extend_with_parameter(a, out.formal.coords().back());
  const std::size_t nv = ext.nvars();
  const PolyMatrix phi =
      PolyMatrix::identity(a.rank(), nv) + Poly::variable(nv, nv - 1) * extend(n, nv);
  out.report.append(lsa_homomorphism_report(out.formal, ext, phi), "intertwining/");
  out.report.append(lie_nijenhuis_report(commutator_algebroid(a), n), "lie-nijenhuis/");
  return out;
}

Report check_equivalence(const LSAlgebroid& a, const MultiDerivation& w,
                         const MultiDerivation& w_prime, const PolyMatrix& n_in) {
  require_degree2(a, w);
  require_degree2(a, w_prime);
  const PolyMatrix n = require_endomorphism(a, n_in);
  const MultiDerivation dn = def_d(a, MultiDerivation::bundle_map(n));
  const auto& coords = a.coords();
  const std::size_t r = a.rank();

  auto ev = [](const MultiDerivation& d, const Section& x, const Section& y) {
    const Section args[] = {x, y};
    return d.evaluate(args);
  };
  auto sym = [](const MultiDerivation& d, const Section& x) {
    const Section args[] = {x};
    return d.evaluate_symbol(args);
  };

  std::vector<std::string> exact;
  std::vector<std::string> integral;
  std::vector<std::string> image;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Section x = a.basis(i);
      const Section y = a.basis(j);
      const Section nx = n.apply(x);
      const Section ny = n.apply(y);
      const std::string where = pair_label(i, j);

      const Section diff = w.value_at({i}, j) - w_prime.value_at({i}, j);
      const Section dnv = dn.value_at({i}, j);
      if (diff != dnv) {
        exact.push_back(format_witness(where, diff.to_string(coords), dnv.to_string(coords)));
      }

      const Section lhs = n.apply(ev(w, x, y));
      const Section rhs = ev(w_prime, x, ny) + ev(w_prime, nx, y) + section_mult(a, nx, ny);
      if (lhs != rhs) {
        integral.push_back(format_witness(where, lhs.to_string(coords), rhs.to_string(coords)));
      }

      const Section vanish = ev(w_prime, nx, ny);
      if (!vanish.is_zero()) {
        image.push_back(format_witness(where, vanish.to_string(coords), "0"));
      }
    }
  }

  std::vector<std::string> exact_symbol;
  std::vector<std::string> symbol_image;
  std::vector<std::string> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    const Section x = a.basis(i);
    const std::string where = frame_label({i});
    const VectorField diff = w.symbol_at({i}) - w_prime.symbol_at({i});
    const VectorField dns = dn.symbol_at({i});
    if (diff != dns) {
      exact_symbol.push_back(format_witness(where, diff.to_string(coords), dns.to_string(coords)));
    }
    const VectorField on_image = sym(w_prime, n.apply(x));
    if (!on_image.is_zero()) {
      symbol_image.push_back(format_witness(where, on_image.to_string(coords), "0"));
    }
    const VectorField an = a.anchor_of(n.apply(x));
    if (diff != an) {
      anchor.push_back(format_witness(where, diff.to_string(coords), an.to_string(coords)));
    }
  }

  Report report;
  report.add("2-exact", "w - w' = d_def N", std::move(exact));
  report.add("2-exact-symbol", "sigma_w - sigma_w' = sigma_{d_def N}", std::move(exact_symbol));
  report.add("integral-1", "N w(x,y) = w'(x,Ny) + w'(Nx,y) + Nx.Ny", std::move(integral));
  report.add("image-vanishing", "w'(Nx,Ny) = 0", std::move(image));
  report.add("symbol-image", "sigma_w'(Nx) = 0", std::move(symbol_image));
  report.add("anchor-relation", "sigma_w - sigma_w' = a o N", std::move(anchor));
  return report;
}

}  // namespace lsakit
