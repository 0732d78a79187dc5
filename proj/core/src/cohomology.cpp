#include "lsakit/cohomology.hpp"

#include <map>
#include <tuple>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

template <typename T>
T negate_if(bool odd, T value) {
  return odd ? -value : value;
}

void check_skew_key(IndexTuple& skew, std::size_t last, std::size_t rank, std::size_t arity,
                    int& sign) {
  if (skew.size() + 1 != arity) throw Error(Errc::ArityError, "component with wrong arity");
  if (last >= rank) throw Error(Errc::IndexOutOfRange, "frame index out of range");
  for (auto i : skew) {
    if (i >= rank) throw Error(Errc::IndexOutOfRange, "frame index out of range");
  }
  sign = sort_with_sign(skew);
}

void require_rep(const LSAlgebroid& a, const Representation& rep) {
  validate_shape(a, rep);
  const Report report = representation_lsa_report(a, rep);
  if (report.passed()) return;
  for (const auto& rec : report.records()) {
    if (rec.status == Status::Fail) {
      throw Error(Errc::NotARepresentation, rec.name + " fails at " + rec.witnesses.front());
    }
  }
  throw Error(Errc::NotARepresentation, "not a representation");
}

std::vector<Section> frame_args(const FrameAlgebroid& a, const IndexTuple& skew, std::size_t last) {
  std::vector<Section> args;
  args.reserve(skew.size() + 1);
  for (auto i : skew) args.push_back(a.basis(i));
  args.push_back(a.basis(last));
  return args;
}

}  // namespace

RepCochain::RepCochain(std::size_t rank, std::size_t erank, std::size_t degree, std::size_t nvars)
    : rank_(rank), erank_(erank), degree_(degree), nvars_(nvars) {
  if (degree == 0) throw Error(Errc::InvalidDegree, "cochains of degree 0 are E-sections");
}

Section RepCochain::at(IndexTuple skew, std::size_t last) const {
  int sign = 0;
  check_skew_key(skew, last, rank_, degree_, sign);
  if (sign == 0) return Section::zero(erank_, nvars_);
  auto it = components_.find({skew, last});
  if (it == components_.end()) return Section::zero(erank_, nvars_);
  return sign > 0 ? it->second : -it->second;
}

void RepCochain::set(IndexTuple skew, std::size_t last, const Section& value) {
  if (value.rank() != erank_) throw Error(Errc::DimensionMismatch, "E-section rank mismatch");
  int sign = 0;
  check_skew_key(skew, last, rank_, degree_, sign);
  if (sign == 0) {
    if (!value.is_zero()) {
      throw Error(Errc::DimensionMismatch, "cochain cannot be nonzero on a repeated skew index");
    }
    return;
  }
  if (value.is_zero()) {
    components_.erase({skew, last});
  } else {
    components_[{skew, last}] = sign > 0 ? value : -value;
  }
}

Section RepCochain::evaluate(std::span<const Section> args) const {
  if (args.size() != degree_) {
    throw Error(Errc::ArityError, "cochain of degree " + std::to_string(degree_) +
                                      " evaluated on " + std::to_string(args.size()) +
                                      " sections");
  }
  for (const auto& s : args) {
    if (s.rank() != rank_) throw Error(Errc::DimensionMismatch, "section rank mismatch");
  }
  Section out = Section::zero(erank_, nvars_);
  for_each_frame_expansion(args, [&](const IndexTuple& idx, const Poly& coeff) {
    IndexTuple skew(idx.begin(), idx.end() - 1);
    const Section v = at(skew, idx.back());
    if (!v.is_zero()) out += coeff * v;
  });
  return out;
}

bool operator==(const RepCochain& a, const RepCochain& b) {
  return a.rank_ == b.rank_ && a.erank_ == b.erank_ && a.degree_ == b.degree_ &&
         a.components_ == b.components_;
}

Section rep_d_eval(const LSAlgebroid& a, const Representation& rep, const RepCochain& w,
                   std::span<const Section> args) {
  const std::size_t n = w.degree();
  if (args.size() != n + 1) throw Error(Errc::ArityError, "differential needs degree + 1 sections");
  const Section& last = args[n];
  Section out = Section::zero(rep.rank, a.nvars());
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = i % 2;
    out += negate_if(odd, rho_act(a, rep, args[i], w.evaluate(without(args, {i}))));

    std::vector<Section> rest = without(args, {i, n});
    rest.push_back(args[i]);
    out += negate_if(odd, mu_act(rep, last, w.evaluate(rest)));

    rest.back() = section_mult(a, args[i], last);
    out -= negate_if(odd, w.evaluate(rest));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Section> rest{commutator_bracket(a, args[i], args[j])};
      for (auto& s : without(args, {i, j})) rest.push_back(std::move(s));
      out += negate_if((i + j) % 2, w.evaluate(rest));
    }
  }
  return out;
}

RepCochain rep_d_unchecked(const LSAlgebroid& a, const Representation& rep, const RepCochain& w) {
  if (w.degree() == 0) throw Error(Errc::InvalidDegree, "use rep_d0 for degree 0");
  if (w.rank() != a.rank() || w.erank() != rep.rank) {
    throw Error(Errc::DimensionMismatch, "cochain on a different bundle");
  }
  const std::size_t n = w.degree();
  RepCochain out(a.rank(), rep.rank, n + 1, a.nvars());
  for (const auto& skew : increasing_tuples(a.rank(), n)) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      out.set(skew, j, rep_d_eval(a, rep, w, frame_args(a, skew, j)));
    }
  }
  return out;
}

RepCochain rep_d(const LSAlgebroid& a, const Representation& rep, const RepCochain& w) {
  require_rep(a, rep);
  return rep_d_unchecked(a, rep, w);
}

RepCochain rep_d0(const LSAlgebroid& a, const Representation& rep, const Section& e) {
  validate_shape(a, rep);
  if (e.rank() != rep.rank) throw Error(Errc::DimensionMismatch, "E-section rank mismatch");
  RepCochain out(a.rank(), rep.rank, 1, a.nvars());
  for (std::size_t j = 0; j < a.rank(); ++j) {
    const Section x = a.basis(j);
    out.set({}, j, mu_act(rep, x, e) - rho_act(a, rep, x, e));
  }
  return out;
}

Report c0_report(const LSAlgebroid& a, const Representation& rep, const Section& e) {
  validate_shape(a, rep);
  if (e.rank() != rep.rank) throw Error(Errc::DimensionMismatch, "E-section rank mismatch");
  std::vector<std::string> witnesses;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      const Section x = a.basis(i);
      const Section y = a.basis(j);
      const Section lhs = rho_act(a, rep, x, rho_act(a, rep, y, e));
      const Section rhs = rho_act(a, rep, a.product(i, j), e);
      if (lhs != rhs) {
        witnesses.push_back(format_witness(frame_label({i, j}), lhs.to_string(a.coords()),
                                           rhs.to_string(a.coords())));
      }
    }
  }
  Report report;
  report.add("c0", "rho(x)rho(y)e = rho(x.y)e", std::move(witnesses));
  return report;
}

bool check_c0(const LSAlgebroid& a, const Representation& rep, const Section& e) {
  return c0_report(a, rep, e).passed();
}

std::vector<std::tuple<IndexTuple, std::size_t, std::size_t>> point_cochain_basis(
    std::size_t rank, std::size_t erank, std::size_t degree) {
  std::vector<std::tuple<IndexTuple, std::size_t, std::size_t>> out;
  if (degree == 0) return out;
  for (const auto& skew : increasing_tuples(rank, degree - 1)) {
    for (std::size_t j = 0; j < rank; ++j) {
      for (std::size_t c = 0; c < erank; ++c) out.emplace_back(skew, j, c);
    }
  }
  return out;
}

namespace {

std::vector<Rational> point_coordinates(const RepCochain& w) {
  const auto basis = point_cochain_basis(w.rank(), w.erank(), w.degree());
  std::vector<Rational> out(basis.size());
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const auto& [skew, last, c] = basis[b];
    auto it = w.components().find({skew, last});
    if (it != w.components().end()) out[b] = it->second[c].constant_term();
  }
  return out;
}

void require_point(const LSAlgebroid& a) {
  if (!a.is_point()) throw Error(Errc::NotPointCase, "cohomology dimensions need a point base");
}

}  // namespace

RationalMatrix rep_d_matrix(const LSAlgebroid& a, const Representation& rep, std::size_t degree) {
  require_point(a);
  validate_shape(a, rep);
  if (degree == 0) throw Error(Errc::InvalidDegree, "degree 0 is handled through C^0");
  const auto source = point_cochain_basis(a.rank(), rep.rank, degree);
  const std::size_t target = binomial(a.rank(), degree) * a.rank() * rep.rank;
  RationalMatrix m(target, source.size());
  for (std::size_t b = 0; b < source.size(); ++b) {
    const auto& [skew, last, c] = source[b];
    RepCochain w(a.rank(), rep.rank, degree, 0);
    w.set(skew, last, Section::basis(rep.rank, c, 0));
    const std::vector<Rational> col = point_coordinates(rep_d_unchecked(a, rep, w));
    for (std::size_t row = 0; row < target; ++row) m(row, b) = col[row];
  }
  return m;
}

PointCohomology point_cohomology_dims(const LSAlgebroid& a, const Representation& rep,
                                      std::size_t max_degree) {
  require_point(a);
  require_rep(a, rep);
  const std::size_t r = a.rank();
  const std::size_t s = rep.rank;
  PointCohomology out;

  // C^0 is the joint kernel of rho_i rho_j - rho(e_i.e_j).
  RationalMatrix c0(r * r * s, s);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const PolyMatrix m = rep.rho[i] * rep.rho[j] - contract(rep.rho, a.product(i, j), 0);
      for (std::size_t p = 0; p < s; ++p) {
        for (std::size_t q = 0; q < s; ++q) c0(((i * r) + j) * s + p, q) = m(p, q).constant_term();
      }
    }
  }
  const KernelAndRank c0_space = rational_kernel_and_rank(c0);
  out.dim_c0 = c0_space.kernel.size();

  const std::size_t dim_c1 = r * s;
  RationalMatrix d0(dim_c1, out.dim_c0);
  for (std::size_t b = 0; b < c0_space.kernel.size(); ++b) {
    std::vector<Poly> comps;
    for (const auto& q : c0_space.kernel[b]) comps.push_back(Poly::constant(0, q));
    out.c0_basis.emplace_back(std::move(comps));
    const std::vector<Rational> col = point_coordinates(rep_d0(a, rep, out.c0_basis.back()));
    for (std::size_t row = 0; row < dim_c1; ++row) d0(row, b) = col[row];
  }
  std::size_t previous_rank = rational_kernel_and_rank(d0).rank;
  out.dim_c0_kernel = out.dim_c0 - previous_rank;

  for (std::size_t k = 1; k <= max_degree; ++k) {
    CohomologyRow row;
    row.degree = k;
    row.dim_cochains = binomial(r, k - 1) * r * s;
    const std::size_t rank_k =
        row.dim_cochains == 0 ? 0 : rational_kernel_and_rank(rep_d_matrix(a, rep, k)).rank;
    row.dim_cocycles = row.dim_cochains - rank_k;
    row.dim_coboundaries = previous_rank;
    row.dim_cohomology = row.dim_cocycles - row.dim_coboundaries;
    out.rows.push_back(row);
    previous_rank = rank_k;
  }
  return out;
}

MultiDerivation::MultiDerivation(std::size_t rank, std::size_t degree, std::size_t nvars)
    : rank_(rank), degree_(degree), nvars_(nvars) {
  if (degree == 0) throw Error(Errc::InvalidDegree, "multiderivations start in degree 1");
}

MultiDerivation MultiDerivation::bundle_map(const PolyMatrix& n) {
  if (!n.is_square()) throw Error(Errc::NotSquare, "bundle map must be square");
  MultiDerivation d(n.rows(), 1, n.nvars());
  for (std::size_t j = 0; j < n.cols(); ++j) d.set_value({}, j, n.column(j));
  return d;
}

Section MultiDerivation::value_at(IndexTuple skew, std::size_t last) const {
  int sign = 0;
  check_skew_key(skew, last, rank_, degree_, sign);
  if (sign == 0) return Section::zero(rank_, nvars_);
  auto it = values_.find({skew, last});
  if (it == values_.end()) return Section::zero(rank_, nvars_);
  return sign > 0 ? it->second : -it->second;
}

VectorField MultiDerivation::symbol_at(IndexTuple skew) const {
  int sign = 0;
  check_skew_key(skew, 0, std::max<std::size_t>(rank_, 1), degree_, sign);
  if (sign == 0) return VectorField::zero(nvars_);
  auto it = symbols_.find(skew);
  if (it == symbols_.end()) return VectorField::zero(nvars_);
  return sign > 0 ? it->second : -it->second;
}

void MultiDerivation::set_value(IndexTuple skew, std::size_t last, const Section& value) {
  if (value.rank() != rank_) throw Error(Errc::DimensionMismatch, "section rank mismatch");
  int sign = 0;
  check_skew_key(skew, last, rank_, degree_, sign);
  if (sign == 0) {
    if (!value.is_zero()) {
      throw Error(Errc::DimensionMismatch, "value cannot be nonzero on a repeated skew index");
    }
    return;
  }
  if (value.is_zero()) {
    values_.erase({skew, last});
  } else {
    values_[{skew, last}] = sign > 0 ? value : -value;
  }
}

void MultiDerivation::set_symbol(IndexTuple skew, const VectorField& field) {
  if (field.dim() != nvars_) throw Error(Errc::DimensionMismatch, "vector field dimension mismatch");
  int sign = 0;
  check_skew_key(skew, 0, std::max<std::size_t>(rank_, 1), degree_, sign);
  if (sign == 0) {
    if (!field.is_zero()) {
      throw Error(Errc::DimensionMismatch, "symbol cannot be nonzero on a repeated index");
    }
    return;
  }
  if (field.is_zero()) {
    symbols_.erase(skew);
  } else {
    symbols_[skew] = sign > 0 ? field : -field;
  }
}

Section MultiDerivation::evaluate(std::span<const Section> args) const {
  if (args.size() != degree_) {
    throw Error(Errc::ArityError, "multiderivation of degree " + std::to_string(degree_) +
                                      " evaluated on " + std::to_string(args.size()) +
                                      " sections");
  }
  for (const auto& s : args) {
    if (s.rank() != rank_) throw Error(Errc::DimensionMismatch, "section rank mismatch");
  }
  const Section& y = args.back();
  Section out = Section::zero(rank_, nvars_);
  for_each_frame_expansion(args.first(degree_ - 1), [&](const IndexTuple& idx, const Poly& coeff) {
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j].is_zero()) continue;
      const Section v = value_at(idx, j);
      if (!v.is_zero()) out += (coeff * y[j]) * v;
    }
    const VectorField sigma = symbol_at(idx);
    if (sigma.is_zero()) return;
    for (std::size_t j = 0; j < rank_; ++j) {
      const Poly dj = sigma.apply(y[j]);
      if (!dj.is_zero()) out[j] += coeff * dj;
    }
  });
  return out;
}

VectorField MultiDerivation::evaluate_symbol(std::span<const Section> args) const {
  if (args.size() + 1 != degree_) {
    throw Error(Errc::ArityError, "symbol of degree " + std::to_string(degree_) +
                                      " evaluated on " + std::to_string(args.size()) +
                                      " sections");
  }
  VectorField out = VectorField::zero(nvars_);
  for_each_frame_expansion(args, [&](const IndexTuple& idx, const Poly& coeff) {
    const VectorField v = symbol_at(idx);
    if (!v.is_zero()) out += coeff * v;
  });
  return out;
}

MultiDerivation MultiDerivation::operator-() const {
  MultiDerivation r = *this;
  for (auto& [k, v] : r.values_) v = -v;
  for (auto& [k, v] : r.symbols_) v = -v;
  return r;
}

MultiDerivation& MultiDerivation::operator+=(const MultiDerivation& other) {
  if (other.rank_ != rank_ || other.degree_ != degree_) {
    throw Error(Errc::DimensionMismatch, "multiderivations of different shape");
  }
  for (const auto& [k, v] : other.values_) set_value(k.first, k.second, value_at(k.first, k.second) + v);
  for (const auto& [k, v] : other.symbols_) set_symbol(k, symbol_at(k) + v);
  return *this;
}

MultiDerivation& MultiDerivation::operator-=(const MultiDerivation& other) {
  return *this += -other;
}

bool operator==(const MultiDerivation& a, const MultiDerivation& b) {
  return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.values_ == b.values_ &&
         a.symbols_ == b.symbols_;
}

Section def_d_eval(const LSAlgebroid& a, const MultiDerivation& w, std::span<const Section> args) {
  const std::size_t n = w.degree();
  if (args.size() != n + 1) throw Error(Errc::ArityError, "differential needs degree + 1 sections");
  const Section& last = args[n];
  Section out = a.zero_section();
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = i % 2;
    out += negate_if(odd, section_mult(a, args[i], w.evaluate(without(args, {i}))));

    std::vector<Section> rest = without(args, {i, n});
    rest.push_back(args[i]);
    out += negate_if(odd, section_mult(a, w.evaluate(rest), last));

    rest.back() = section_mult(a, args[i], last);
    out -= negate_if(odd, w.evaluate(rest));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Section> rest{commutator_bracket(a, args[i], args[j])};
      for (auto& s : without(args, {i, j})) rest.push_back(std::move(s));
      out += negate_if((i + j) % 2, w.evaluate(rest));
    }
  }
  return out;
}

VectorField def_d_symbol_eval(const LSAlgebroid& a, const MultiDerivation& w,
                              std::span<const Section> args) {
  const std::size_t n = w.degree();
  if (args.size() != n) throw Error(Errc::ArityError, "symbol of the differential needs degree sections");
  VectorField out = VectorField::zero(a.nvars());
  for (std::size_t i = 0; i < n; ++i) {
    const bool odd = i % 2;
    const std::vector<Section> rest = without(args, {i});
    out += negate_if(odd, vf_bracket(a.anchor_of(args[i]), w.evaluate_symbol(rest)));
    std::vector<Section> full = rest;
    full.push_back(args[i]);
    out += negate_if(odd, a.anchor_of(w.evaluate(full)));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Section> rest{commutator_bracket(a, args[i], args[j])};
      for (auto& s : without(args, {i, j})) rest.push_back(std::move(s));
      out += negate_if((i + j) % 2, w.evaluate_symbol(rest));
    }
  }
  return out;
}

MultiDerivation def_d(const LSAlgebroid& a, const MultiDerivation& w) {
  if (w.degree() == 0) throw Error(Errc::InvalidDegree, "multiderivations start in degree 1");
  if (w.rank() != a.rank() || w.nvars() != a.nvars()) {
    throw Error(Errc::DimensionMismatch, "multiderivation on a different algebroid");
  }
  const std::size_t n = w.degree();
  MultiDerivation out(a.rank(), n + 1, a.nvars());
  for (const auto& skew : increasing_tuples(a.rank(), n)) {
    std::vector<Section> args;
    for (auto i : skew) args.push_back(a.basis(i));
    out.set_symbol(skew, def_d_symbol_eval(a, w, args));
    for (std::size_t j = 0; j < a.rank(); ++j) {
      out.set_value(skew, j, def_d_eval(a, w, frame_args(a, skew, j)));
    }
  }
  return out;
}

}  // namespace lsakit
