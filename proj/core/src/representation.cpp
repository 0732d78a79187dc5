#include "lsakit/representation.hpp"

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void require_rep(bool ok, const Report& report, const char* what) {
  if (ok) return;
  for (const auto& rec : report.records()) {
    if (rec.status == Status::Fail) {
      throw Error(Errc::NotARepresentation,
                  std::string(what) + ": " + rec.name + " fails at " + rec.witnesses.front());
    }
  }
  throw Error(Errc::NotARepresentation, what);
}

}  // namespace

Representation Representation::zero(std::size_t algebroid_rank, std::size_t rank,
                                    std::size_t nvars) {
  Representation rep;
  rep.rank = rank;
  rep.rho.assign(algebroid_rank, PolyMatrix(rank, rank, nvars));
  rep.mu.assign(algebroid_rank, PolyMatrix(rank, rank, nvars));
  return rep;
}

void validate_shape(const FrameAlgebroid& a, const Representation& rep) {
  if (rep.rho.size() != a.rank() || rep.mu.size() != a.rank()) {
    throw Error(Errc::DimensionMismatch, "representation needs one matrix per frame element (" +
                                             std::to_string(a.rank()) + ")");
  }
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (const PolyMatrix* m : {&rep.rho[i], &rep.mu[i]}) {
      if (m->rows() != rep.rank || m->cols() != rep.rank) {
        throw Error(Errc::DimensionMismatch, "representation matrix for e" + idx(i) +
                                                 " is not " + std::to_string(rep.rank) + "x" +
                                                 std::to_string(rep.rank));
      }
    }
  }
}

PolyMatrix contract(const std::vector<PolyMatrix>& ms, const Section& x, std::size_t nvars) {
  if (ms.size() != x.rank()) throw Error(Errc::DimensionMismatch, "section rank mismatch");
  const std::size_t s = ms.empty() ? 0 : ms.front().rows();
  PolyMatrix out(s, s, nvars);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (x[i].is_zero() || ms[i].is_zero()) continue;
    out += x[i] * ms[i];
  }
  return out;
}

Section rho_act(const FrameAlgebroid& a, const Representation& rep, const Section& x,
                const Section& u) {
  if (u.rank() != rep.rank) throw Error(Errc::DimensionMismatch, "E-section rank mismatch");
  return a.derive(x, u) + contract(rep.rho, x, a.nvars()).apply(u);
}

Section mu_act(const Representation& rep, const Section& x, const Section& u) {
  if (u.rank() != rep.rank) throw Error(Errc::DimensionMismatch, "E-section rank mismatch");
  const std::size_t nvars = rep.mu.empty() ? 0 : rep.mu.front().nvars();
  return contract(rep.mu, x, nvars).apply(u);
}

Representation build_left_mult_rep(const LSAlgebroid& a) {
  sub_adjacent(a);  // validates
  const std::size_t r = a.rank();
  Representation rep = Representation::zero(r, r, a.nvars());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t k = 0; k < r; ++k) rep.rho[i](k, j) = a.product(i, j)[k];
    }
  }
  return rep;
}

Report representation_lie_report(const LieAlgebroid& l, const Representation& rep) {
  validate_shape(l, rep);
  Report report;
  std::vector<std::string> matrix;
  std::vector<std::string> symbol;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    for (std::size_t j = i + 1; j < l.rank(); ++j) {
      const PolyMatrix lhs = contract(rep.rho, l.bracket(i, j), l.nvars());
      const PolyMatrix rhs = rep.rho[j].derive(l.anchor(i)) - rep.rho[i].derive(l.anchor(j)) +
                             commutator(rep.rho[i], rep.rho[j]);
      if (!(lhs == rhs)) {
        matrix.push_back(format_witness("rho([e" + idx(i) + ",e" + idx(j) + "]) vs [rho(e" +
                                            idx(i) + "),rho(e" + idx(j) + ")]",
                                        lhs.to_string(l.coords()), rhs.to_string(l.coords())));
      }
      const VectorField sl = l.anchor_of(l.bracket(i, j));
      const VectorField sr = vf_bracket(l.anchor(i), l.anchor(j));
      if (!(sl == sr)) {
        symbol.push_back(format_witness("symbol of rho([e" + idx(i) + ",e" + idx(j) + "])",
                                        sl.to_string(l.coords()), sr.to_string(l.coords())));
      }
    }
  }
  report.add("rho-bracket", "rho([x,y]) = [rho(x), rho(y)] (matrix parts) on frame pairs",
             std::move(matrix));
  report.add("rho-symbol", "symbol of rho([x,y]) equals [a(x), a(y)] on frame pairs",
             std::move(symbol));
  return report;
}

bool check_representation_lie(const LieAlgebroid& l, const Representation& rep) {
  return representation_lie_report(l, rep).passed();
}

Representation dual_matrices(const Representation& rep) {
  Representation out;
  out.rank = rep.rank;
  for (const auto& m : rep.rho) out.rho.push_back(-m.transpose());
  for (const auto& m : rep.mu) out.mu.push_back(-m.transpose());
  return out;
}

Representation dual_rep(const LieAlgebroid& l, const Representation& rep) {
  const Report report = representation_lie_report(l, rep);
  require_rep(report.passed(), report, "dual of a non-representation");
  return dual_matrices(rep);
}

Report representation_lsa_report(const LSAlgebroid& a, const Representation& rep) {
  validate_shape(a, rep);
  Report report = representation_lie_report(commutator_algebroid(a), rep);
  std::vector<std::string> cond;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      const PolyMatrix lhs = rep.mu[j].derive(a.anchor(i)) + rep.rho[i] * rep.mu[j] -
                             rep.mu[j] * rep.rho[i];
      const PolyMatrix rhs =
          contract(rep.mu, a.product(i, j), a.nvars()) - rep.mu[j] * rep.mu[i];
      if (!(lhs == rhs)) {
        cond.push_back(format_witness("rho(e" + idx(i) + ")mu(e" + idx(j) + ") - mu(e" + idx(j) +
                                          ")rho(e" + idx(i) + ") vs mu(e" + idx(i) + ".e" +
                                          idx(j) + ") - mu(e" + idx(j) + ")mu(e" + idx(i) + ")",
                                      lhs.to_string(a.coords()), rhs.to_string(a.coords())));
      }
    }
  }
  report.add("rho-mu-compatibility",
             "rho(x)mu(y) - mu(y)rho(x) = mu(x.y) - mu(y)mu(x) on frame pairs", std::move(cond));
  return report;
}

bool check_representation_lsa(const LSAlgebroid& a, const Representation& rep) {
  return representation_lsa_report(a, rep).passed();
}

DerivedReps derived_reps(const LSAlgebroid& a, const Representation& rep) {
  const Report base = representation_lsa_report(a, rep);
  require_rep(base.passed(), base, "derived representations need a representation");
  const std::size_t r = a.rank();
  DerivedReps out;

  out.rep1.rank = rep.rank;
  for (std::size_t i = 0; i < r; ++i) {
    out.rep1.rho.push_back(rep.rho[i] - rep.mu[i]);
    out.rep1.mu.emplace_back(rep.rank, rep.rank, a.nvars());
  }
  out.rep2.rank = rep.rank;
  for (std::size_t i = 0; i < r; ++i) {
    out.rep2.rho.push_back((rep.mu[i] - rep.rho[i]).transpose());
    out.rep2.mu.push_back(rep.mu[i].transpose());
  }

  const LieAlgebroid g = commutator_algebroid(a);
  out.report.append(representation_lie_report(g, out.rep1), "rho-minus-mu/");
  out.report.append(representation_lsa_report(a, out.rep2), "dual-pair/");

  Representation minus_mu = out.rep1;
  for (std::size_t i = 0; i < r; ++i) minus_mu.mu[i] = -rep.mu[i];
  out.minus_mu_rep = check_representation_lsa(a, minus_mu);
  out.dual_rep = check_representation_lsa(a, dual_matrices(rep));

  std::vector<std::string> comm;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i + 1; j < r; ++j) {
      const PolyMatrix c = commutator(rep.mu[i], rep.mu[j]);
      if (!c.is_zero()) {
        comm.push_back(format_witness("[mu(e" + idx(i) + "),mu(e" + idx(j) + ")]",
                                      c.to_string(a.coords()), "0"));
      }
    }
  }
  out.mu_commutes = comm.empty();

  std::vector<std::string> eq;
  if (out.minus_mu_rep != out.mu_commutes || out.dual_rep != out.mu_commutes) {
    eq.push_back(format_witness("equivalent conditions",
                                std::string(out.minus_mu_rep ? "true" : "false") + "," +
                                    (out.dual_rep ? "true" : "false"),
                                out.mu_commutes ? "true" : "false"));
  }
  out.report.add("equivalence",
                 "(E; rho-mu, -mu) is a representation iff (E*; rho*, mu*) is one iff the mu(e_i) "
                 "commute",
                 std::move(eq));
  return out;
}

}  // namespace lsakit
