#include "lsakit/algebroid.hpp"

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

void require_rank(const FrameAlgebroid& a, const Section& s, const char* what) {
  if (s.rank() != a.rank()) {
    throw Error(Errc::DimensionMismatch, std::string(what) + " has rank " +
                                             std::to_string(s.rank()) + ", bundle rank is " +
                                             std::to_string(a.rank()));
  }
}

std::string label3(std::size_t i, std::size_t j, std::size_t k) {
  return frame_label({i, j, k});
}

}  // namespace

FrameAlgebroid::FrameAlgebroid(std::vector<std::string> coords,
                               std::vector<std::vector<Section>> table,
                               std::vector<VectorField> anchor)
    : coords_(std::move(coords)), table_(std::move(table)), anchor_(std::move(anchor)) {
  const std::size_t r = anchor_.size();
  if (table_.size() != r) {
    throw Error(Errc::DimensionMismatch, "structure table has " + std::to_string(table_.size()) +
                                             " rows for rank " + std::to_string(r));
  }
  for (std::size_t i = 0; i < r; ++i) {
    if (table_[i].size() != r) {
      throw Error(Errc::DimensionMismatch, "structure row " + std::to_string(i + 1) +
                                               " has wrong length");
    }
    for (const auto& s : table_[i]) {
      if (s.rank() != r) throw Error(Errc::DimensionMismatch, "structure entry of wrong rank");
    }
    if (anchor_[i].dim() != coords_.size()) {
      throw Error(Errc::DimensionMismatch, "anchor of e" + std::to_string(i + 1) + " has " +
                                               std::to_string(anchor_[i].dim()) +
                                               " components, chart has " +
                                               std::to_string(coords_.size()));
    }
  }
}

VectorField FrameAlgebroid::anchor_of(const Section& x) const {
  require_rank(*this, x, "section");
  VectorField out = VectorField::zero(nvars());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x[i].is_zero() || anchor_[i].is_zero()) continue;
    out += x[i] * anchor_[i];
  }
  return out;
}

Section FrameAlgebroid::derive(const Section& x, const Section& u) const {
  const VectorField xf = anchor_of(x);
  std::vector<Poly> comps;
  comps.reserve(u.rank());
  for (std::size_t k = 0; k < u.rank(); ++k) comps.push_back(xf.apply(u[k]));
  return Section(std::move(comps));
}

namespace {

Section tensorial_part(const FrameAlgebroid& a, const Section& x, const Section& y) {
  Section out = a.zero_section();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < a.rank(); ++j) {
      if (y[j].is_zero()) continue;
      const Section& c = a.table()[i][j];
      if (c.is_zero()) continue;
      out += (x[i] * y[j]) * c;
    }
  }
  return out;
}

}  // namespace

Section section_mult(const LSAlgebroid& a, const Section& x, const Section& y) {
  require_rank(a, x, "left factor");
  require_rank(a, y, "right factor");
  return tensorial_part(a, x, y) + a.derive(x, y);
}

Section associator(const LSAlgebroid& a, const Section& x, const Section& y, const Section& z) {
  return section_mult(a, section_mult(a, x, y), z) - section_mult(a, x, section_mult(a, y, z));
}

Section commutator_bracket(const LSAlgebroid& a, const Section& x, const Section& y) {
  return section_mult(a, x, y) - section_mult(a, y, x);
}

Section lie_bracket(const LieAlgebroid& l, const Section& x, const Section& y) {
  require_rank(l, x, "left argument");
  require_rank(l, y, "right argument");
  return tensorial_part(l, x, y) + l.derive(x, y) - l.derive(y, x);
}

namespace {

std::string pair_name(std::size_t i, std::size_t j) {
  return "e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1);
}

}  // namespace

Report check_left_symmetric(const LSAlgebroid& a) {
  Report report;
  std::vector<std::string> assoc;
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const Section lhs = associator(a, a.basis(i), a.basis(j), a.basis(k));
        const Section rhs = associator(a, a.basis(j), a.basis(i), a.basis(k));
        if (!(lhs == rhs)) {
          assoc.push_back(format_witness(label3(i, j, k) + " vs " + label3(j, i, k),
                                         lhs.to_string(a.coords()), rhs.to_string(a.coords())));
        }
      }
    }
  }
  report.add("associator-symmetry", "(x,y,z) = (y,x,z) on all frame triples", std::move(assoc));

  std::vector<std::vector<Section>> comm(r, std::vector<Section>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) comm[i][j] = a.product(i, j) - a.product(j, i);
  }
  std::vector<std::string> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const VectorField lhs = a.anchor_of(comm[i][j]);
      const VectorField rhs = vf_bracket(a.anchor(i), a.anchor(j));
      if (!(lhs == rhs)) {
        anchor.push_back(format_witness("a(e" + std::to_string(i + 1) + ".e" +
                                            std::to_string(j + 1) + " - e" +
                                            std::to_string(j + 1) + ".e" + std::to_string(i + 1) +
                                            ") vs [a(e" + std::to_string(i + 1) + "),a(e" +
                                            std::to_string(j + 1) + ")]",
                                        lhs.to_string(a.coords()), rhs.to_string(a.coords())));
      }
    }
  }
  report.add("anchor-compatibility", "a(x.y - y.x) = [a(x), a(y)] on all frame pairs",
             std::move(anchor));
  return report;
}

LieAlgebroid commutator_algebroid(const LSAlgebroid& a) {
  const std::size_t r = a.rank();
  std::vector<std::vector<Section>> b(r, std::vector<Section>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) b[i][j] = a.product(i, j) - a.product(j, i);
  }
  return LieAlgebroid(a.coords(), std::move(b), a.anchors());
}

LieAlgebroid sub_adjacent(const LSAlgebroid& a) {
  const Report rep = check_left_symmetric(a);
  if (!rep.passed()) {
    for (const auto& rec : rep.records()) {
      if (rec.status == Status::Fail) {
        throw Error(Errc::NotLeftSymmetric, rec.name + " fails at " + rec.witnesses.front());
      }
    }
  }
  return commutator_algebroid(a);
}

Report check_lie_algebroid(const LieAlgebroid& l) {
  Report report;
  const std::size_t r = l.rank();
  std::vector<std::string> skew;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      const Section lhs = l.bracket(i, j);
      const Section rhs = -l.bracket(j, i);
      if (!(lhs == rhs)) {
        skew.push_back(format_witness("[" + pair_name(i, j) + "] vs -[" + pair_name(j, i) + "]",
                                      lhs.to_string(l.coords()), rhs.to_string(l.coords())));
      }
    }
  }
  report.add("skew-symmetry", "[x,y] = -[y,x] on all frame pairs", std::move(skew));

  std::vector<std::string> jacobi;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      for (std::size_t k = j + 1; k < r; ++k) {
        const Section x = l.basis(i), y = l.basis(j), z = l.basis(k);
        const Section sum = lie_bracket(l, lie_bracket(l, x, y), z) +
                            lie_bracket(l, lie_bracket(l, y, z), x) +
                            lie_bracket(l, lie_bracket(l, z, x), y);
        if (!sum.is_zero()) {
          jacobi.push_back(format_witness("Jacobi" + label3(i, j, k), sum.to_string(l.coords()),
                                          "0"));
        }
      }
    }
  }
  report.add("jacobi", "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all frame triples",
             std::move(jacobi));

  std::vector<std::string> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const VectorField lhs = l.anchor_of(l.bracket(i, j));
      const VectorField rhs = vf_bracket(l.anchor(i), l.anchor(j));
      if (!(lhs == rhs)) {
        anchor.push_back(format_witness("a([" + pair_name(i, j) + "]) vs [a(e" +
                                            std::to_string(i + 1) + "),a(e" +
                                            std::to_string(j + 1) + ")]",
                                        lhs.to_string(l.coords()), rhs.to_string(l.coords())));
      }
    }
  }
  report.add("anchor-morphism", "a([x,y]) = [a(x), a(y)] on all frame pairs", std::move(anchor));
  return report;
}

Report lsa_homomorphism_report(const LSAlgebroid& a1, const LSAlgebroid& a2,
                               const PolyMatrix& phi) {
  if (a1.nvars() != a2.nvars()) {
    throw Error(Errc::DimensionMismatch, "homomorphism between different base charts");
  }
  if (phi.rows() != a2.rank() || phi.cols() != a1.rank()) {
    throw Error(Errc::DimensionMismatch, "map must be " + std::to_string(a2.rank()) + "x" +
                                             std::to_string(a1.rank()));
  }
  Report report;
  std::vector<Section> images;
  for (std::size_t i = 0; i < a1.rank(); ++i) images.push_back(phi.column(i));

  std::vector<std::string> mult;
  for (std::size_t i = 0; i < a1.rank(); ++i) {
    for (std::size_t j = 0; j < a1.rank(); ++j) {
      const Section lhs = phi.apply(a1.product(i, j));
      const Section rhs = section_mult(a2, images[i], images[j]);
      if (!(lhs == rhs)) {
        mult.push_back(format_witness("phi(e" + std::to_string(i + 1) + ".e" +
                                          std::to_string(j + 1) + ")",
                                      lhs.to_string(a2.coords()), rhs.to_string(a2.coords())));
      }
    }
  }
  report.add("multiplicative", "phi(x.y) = phi(x).phi(y) on all frame pairs", std::move(mult));

  std::vector<std::string> anchor;
  for (std::size_t i = 0; i < a1.rank(); ++i) {
    const VectorField lhs = a2.anchor_of(images[i]);
    if (!(lhs == a1.anchor(i))) {
      anchor.push_back(format_witness("a2(phi(e" + std::to_string(i + 1) + "))",
                                      lhs.to_string(a2.coords()),
                                      a1.anchor(i).to_string(a1.coords())));
    }
  }
  report.add("anchor", "a2(phi(x)) = a1(x) on the frame", std::move(anchor));
  return report;
}

bool check_lsa_homomorphism(const LSAlgebroid& a1, const LSAlgebroid& a2, const PolyMatrix& phi) {
  return lsa_homomorphism_report(a1, a2, phi).passed();
}

Report lie_admissible_report(const LSAlgebroid& a) {
  if (!a.is_point()) {
    throw Error(Errc::NotPointCase, "Lie-admissibility is checked on algebras over a point");
  }
  Report report;
  std::vector<std::string> witnesses;
  const std::size_t r = a.rank();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const Section x = a.basis(i), y = a.basis(j), z = a.basis(k);
        const Section sum = associator(a, x, y, z) - associator(a, y, x, z) +
                            associator(a, y, z, x) - associator(a, z, y, x) +
                            associator(a, z, x, y) - associator(a, x, z, y);
        if (!sum.is_zero()) {
          witnesses.push_back(format_witness(label3(i, j, k), sum.to_string(a.coords()), "0"));
        }
      }
    }
  }
  report.add("lie-admissible", "six-term associator sum vanishes on all basis triples",
             std::move(witnesses));
  return report;
}

bool check_lie_admissible(const LSAlgebroid& a) { return lie_admissible_report(a).passed(); }

Poly FormCochain::at(IndexTuple idx) const {
  if (idx.size() != degree_) throw Error(Errc::ArityError, "form evaluated with wrong arity");
  const int sign = sort_with_sign(idx);
  if (sign == 0) return Poly(nvars_);
  auto it = components_.find(idx);
  if (it == components_.end()) return Poly(nvars_);
  return sign > 0 ? it->second : -it->second;
}

void FormCochain::set(IndexTuple idx, const Poly& value) {
  if (idx.size() != degree_) throw Error(Errc::ArityError, "form component with wrong arity");
  for (auto i : idx) {
    if (i >= rank_) throw Error(Errc::IndexOutOfRange, "form index out of range");
  }
  const int sign = sort_with_sign(idx);
  if (sign == 0) {
    if (!value.is_zero()) {
      throw Error(Errc::DimensionMismatch, "skew form cannot be nonzero on a repeated index");
    }
    return;
  }
  if (value.is_zero()) {
    components_.erase(idx);
  } else {
    components_[idx] = sign > 0 ? value : -value;
  }
}

Poly FormCochain::evaluate(std::span<const Section> args) const {
  if (args.size() != degree_) throw Error(Errc::ArityError, "form evaluated with wrong arity");
  Poly out(nvars_);
  for_each_frame_expansion(args, [&](const IndexTuple& idx, const Poly& coeff) {
    const Poly v = at(idx);
    if (!v.is_zero()) out += coeff * v;
  });
  return out;
}

bool operator==(const FormCochain& a, const FormCochain& b) {
  return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.components_ == b.components_;
}

Poly lie_form_d_eval(const LieAlgebroid& l, const FormCochain& w, std::span<const Section> args) {
  const std::size_t m = args.size();
  Poly out(l.nvars());
  for (std::size_t i = 0; i < m; ++i) {
    const std::vector<Section> rest = without(args, {i});
    Poly term = l.anchor_of(args[i]).apply(w.evaluate(rest));
    if (i % 2) term = -term;
    out += term;
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      std::vector<Section> rest{lie_bracket(l, args[i], args[j])};
      for (auto& s : without(args, {i, j})) rest.push_back(std::move(s));
      Poly term = w.evaluate(rest);
      if ((i + j) % 2) term = -term;
      out += term;
    }
  }
  return out;
}

FormCochain lie_form_d(const LieAlgebroid& l, const FormCochain& w) {
  if (w.rank() != l.rank()) throw Error(Errc::DimensionMismatch, "form on a different bundle");
  if (w.degree() > l.rank()) {
    throw Error(Errc::InvalidDegree, "form degree " + std::to_string(w.degree()) +
                                         " exceeds rank " + std::to_string(l.rank()));
  }
  FormCochain out(l.rank(), w.degree() + 1, l.nvars());
  for (const auto& idx : increasing_tuples(l.rank(), w.degree() + 1)) {
    std::vector<Section> args;
    for (auto i : idx) args.push_back(l.basis(i));
    out.set(idx, lie_form_d_eval(l, w, args));
  }
  return out;
}

LSAlgebroid specialize(const LSAlgebroid& a, std::size_t var, const Rational& value) {
  if (var >= a.nvars()) throw Error(Errc::IndexOutOfRange, "specialization index out of range");
  auto sp = [&](const Poly& p) { return p.nvars() == 0 ? p : p.specialize(var, value); };
  std::vector<std::string> coords = a.coords();
  coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(var));
  const std::size_t r = a.rank();
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Poly> comps;
      for (const auto& p : a.product(i, j).components()) comps.push_back(sp(p));
      table[i][j] = Section(std::move(comps));
    }
    std::vector<Poly> comps;
    for (std::size_t mu = 0; mu < a.nvars(); ++mu) {
      if (mu != var) comps.push_back(sp(a.anchor(i)[mu]));
    }
    anchor.emplace_back(std::move(comps));
  }
  return LSAlgebroid(std::move(coords), std::move(table), std::move(anchor));
}

LSAlgebroid extend_with_parameter(const LSAlgebroid& a, const std::string& name) {
  const std::size_t n = a.nvars() + 1;
  std::vector<std::string> coords = a.coords();
  coords.push_back(name);
  const std::size_t r = a.rank();
  std::vector<std::vector<Section>> table(r, std::vector<Section>(r));
  std::vector<VectorField> anchor;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<Poly> comps;
      for (const auto& p : a.product(i, j).components()) comps.push_back(p.extended(n));
      table[i][j] = Section(std::move(comps));
    }
    std::vector<Poly> comps;
    for (const auto& p : a.anchor(i).components()) comps.push_back(p.extended(n));
    comps.push_back(Poly(n));
    anchor.emplace_back(std::move(comps));
  }
  return LSAlgebroid(std::move(coords), std::move(table), std::move(anchor));
}

}  // namespace lsakit
