#include "lsakit/multivector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <random>
#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

bool odd(int v) noexcept { return (v & 1) != 0; }

/// Sign of e_I ^ e_J relative to e_{I|J}; 0 when the wedges share a factor.
int wedge_sign(WedgeMask i, WedgeMask j) noexcept {
  if (i & j) return 0;
  int swaps = 0;
  for (WedgeMask rest = j; rest; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    swaps += std::popcount(static_cast<WedgeMask>(i >> bit));
  }
  return odd(swaps) ? -1 : 1;
}

std::vector<std::size_t> bits_of(WedgeMask m) {
  std::vector<std::size_t> out;
  for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  return out;
}

void require_same_bundle(const Multivector& x, const Multivector& y) {
  if (x.rank() != y.rank()) {
    throw Error(Errc::DimensionMismatch, "multivectors over bundles of rank " +
                                             std::to_string(x.rank()) + " and " +
                                             std::to_string(y.rank()));
  }
}

int homogeneous_grade(const Multivector& x, const char* what) {
  const int g = x.grade();
  if (g < 0) throw Error(Errc::InvalidDegree, std::string(what) + " is not homogeneous");
  return g;
}

}  // namespace

int popcount(WedgeMask m) noexcept { return std::popcount(m); }

Multivector::Multivector(std::size_t rank, std::size_t nvars) : rank_(rank), nvars_(nvars) {
  if (rank > kMaxRank) {
    throw Error(Errc::DimensionMismatch, "multivectors support rank up to " +
                                             std::to_string(kMaxRank));
  }
}

Multivector Multivector::function(std::size_t rank, const Poly& f) {
  Multivector m(rank, f.nvars());
  m.add_term(0, f);
  return m;
}

Multivector Multivector::from_section(const Section& s) {
  std::size_t nv = 0;
  for (const auto& c : s.components()) nv = std::max(nv, c.nvars());
  Multivector m(s.rank(), nv);
  for (std::size_t i = 0; i < s.rank(); ++i) m.add_term(WedgeMask{1} << i, s[i]);
  return m;
}

Multivector Multivector::wedge_of(std::size_t rank, std::size_t nvars, const IndexTuple& idx) {
  Multivector m(rank, nvars);
  IndexTuple sorted = idx;
  const int sign = sort_with_sign(sorted);
  if (sign == 0) return m;
  WedgeMask mask = 0;
  for (auto i : sorted) {
    if (i >= rank) throw Error(Errc::IndexOutOfRange, "wedge index out of range");
    mask |= WedgeMask{1} << i;
  }
  m.add_term(mask, Poly::constant(nvars, sign));
  return m;
}

int Multivector::grade() const noexcept {
  if (terms_.empty()) return 0;
  const int g = std::popcount(terms_.begin()->first);
  for (const auto& [mask, c] : terms_) {
    if (std::popcount(mask) != g) return -1;
  }
  return g;
}

Multivector Multivector::part(unsigned grade) const {
  Multivector out(rank_, nvars_);
  for (const auto& [mask, c] : terms_) {
    if (static_cast<unsigned>(std::popcount(mask)) == grade) out.terms_.emplace(mask, c);
  }
  return out;
}

void Multivector::add_term(WedgeMask mask, const Poly& coefficient) {
  if (coefficient.is_zero()) return;
  if (rank_ < kMaxRank && (mask >> rank_) != 0) {
    throw Error(Errc::IndexOutOfRange, "wedge factor beyond the bundle rank");
  }
  nvars_ = std::max(nvars_, coefficient.nvars());
  auto [it, inserted] = terms_.try_emplace(mask, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector Multivector::operator-() const {
  Multivector out = *this;
  for (auto& [mask, c] : out.terms_) c = -c;
  return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
  require_same_bundle(*this, other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) {
  require_same_bundle(*this, other);
  for (const auto& [mask, c] : other.terms_) add_term(mask, -c);
  return *this;
}

Multivector operator*(const Poly& f, const Multivector& x) {
  Multivector out(x.rank_, std::max(x.nvars_, f.nvars()));
  if (f.is_zero()) return out;
  for (const auto& [mask, c] : x.terms_) out.add_term(mask, f * c);
  return out;
}

Multivector operator*(const Rational& q, const Multivector& x) {
  Multivector out(x.rank_, x.nvars_);
  if (q == 0) return out;
  for (const auto& [mask, c] : x.terms_) out.add_term(mask, c * q);
  return out;
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.rank_ == b.rank_ && a.terms_ == b.terms_;
}

std::string Multivector::to_string(std::span<const std::string> coords) const {
  if (terms_.empty()) return "0";
  // Grade first, then lexicographic in the factors.
  std::vector<std::pair<std::vector<std::size_t>, const Poly*>> order;
  for (const auto& [mask, c] : terms_) order.emplace_back(bits_of(mask), &c);
  std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
    if (l.first.size() != r.first.size()) return l.first.size() < r.first.size();
    return l.first < r.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [factors, c] : order) {
    if (!first) os << " + ";
    first = false;
    if (factors.empty()) {
      os << '(' << c->to_string(coords) << ')';
      continue;
    }
    if (!c->is_one()) os << '(' << c->to_string(coords) << ")*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "^e" : "e") << factors[k] + 1;
  }
  return os.str();
}

Multivector wedge(const Multivector& x, const Multivector& y) {
  require_same_bundle(x, y);
  Multivector out(x.rank(), std::max(x.nvars(), y.nvars()));
  for (const auto& [mi, ci] : x.terms()) {
    for (const auto& [mj, cj] : y.terms()) {
      const int s = wedge_sign(mi, mj);
      if (s == 0) continue;
      Poly c = ci * cj;
      if (s < 0) c = -c;
      out.add_term(mi | mj, c);
    }
  }
  return out;
}

namespace {

/// (e_I . g) ^ e_J + g (e_I . e_J) added into `out`, scaled by f.
void dot_terms(const LSAlgebroid& a, WedgeMask wi, const Poly& f, WedgeMask wj, const Poly& g,
               Multivector& out) {
  if (wi == 0) return;
  const std::vector<std::size_t> xs = bits_of(wi);
  const std::vector<std::size_t> ys = bits_of(wj);
  const int k = static_cast<int>(xs.size());

  if (!g.is_constant()) {
    for (int p = 1; p <= k; ++p) {
      const std::size_t xp = xs[static_cast<std::size_t>(p - 1)];
      Poly d = a.anchor(xp).apply(g);
      if (d.is_zero()) continue;
      const WedgeMask rest = wi & ~(WedgeMask{1} << xp);
      const int s = wedge_sign(rest, wj);
      if (s == 0) continue;
      if (odd(k - p) != (s < 0)) d = -d;
      out.add_term(rest | wj, f * d);
    }
  }
  if (wj == 0) return;
  const Poly fg = f * g;
  for (int i = 1; i <= k; ++i) {
    const std::size_t xi = xs[static_cast<std::size_t>(i - 1)];
    const WedgeMask xrest = wi & ~(WedgeMask{1} << xi);
    for (int j = 1; j <= static_cast<int>(ys.size()); ++j) {
      const std::size_t yj = ys[static_cast<std::size_t>(j - 1)];
      const WedgeMask yrest = wj & ~(WedgeMask{1} << yj);
      const int s_rest = wedge_sign(xrest, yrest);
      if (s_rest == 0) continue;
      const WedgeMask tail = xrest | yrest;
      const Section& c = a.product(xi, yj);
      for (std::size_t m = 0; m < c.rank(); ++m) {
        if (c[m].is_zero()) continue;
        const WedgeMask em = WedgeMask{1} << m;
        const int s_m = wedge_sign(em, tail);
        if (s_m == 0) continue;
        const bool negative = odd(i + j) != ((s_rest * s_m) < 0);
        Poly coeff = c[m] * fg;
        if (negative) coeff = -coeff;
        out.add_term(em | tail, coeff);
      }
    }
  }
}

}  // namespace

Multivector dot_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y) {
  require_same_bundle(x, y);
  if (x.rank() != a.rank()) throw Error(Errc::DimensionMismatch, "multivector of wrong rank");
  Multivector out(a.rank(), std::max({a.nvars(), x.nvars(), y.nvars()}));
  for (const auto& [wi, f] : x.terms()) {
    for (const auto& [wj, g] : y.terms()) dot_terms(a, wi, f, wj, g, out);
  }
  return out;
}

namespace {

std::vector<std::pair<int, Multivector>> grade_parts(const Multivector& x) {
  std::map<int, Multivector> parts;
  for (const auto& [mask, c] : x.terms()) {
    auto [it, inserted] = parts.try_emplace(std::popcount(mask), x.rank(), x.nvars());
    it->second.add_term(mask, c);
  }
  return {parts.begin(), parts.end()};
}

}  // namespace

Multivector bracket_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y) {
  require_same_bundle(x, y);
  Multivector out(a.rank(), std::max({a.nvars(), x.nvars(), y.nvars()}));
  for (const auto& [gx, px] : grade_parts(x)) {
    for (const auto& [gy, py] : grade_parts(y)) {
      out += dot_S(a, px, py);
      const Multivector back = dot_S(a, py, px);
      if (odd((gx - 1) * (gy - 1))) {
        out += back;
      } else {
        out -= back;
      }
    }
  }
  return out;
}

Multivector associator_S(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                         const Multivector& z) {
  return dot_S(a, dot_S(a, x, y), z) - dot_S(a, x, dot_S(a, y, z));
}

Multivector super_associator(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                             const Multivector& z) {
  const int gx = homogeneous_grade(x, "x");
  const int gy = homogeneous_grade(y, "y");
  const Multivector c1 = associator_S(a, x, y, z);
  const Multivector c2 = associator_S(a, y, x, z);
  return odd((gx - 1) * (gy - 1)) ? c1 + c2 : c1 - c2;
}

Multivector cyclic_identity(const LSAlgebroid& a, const Multivector& x, const Multivector& y,
                            const Multivector& z) {
  const int sx = homogeneous_grade(x, "x") - 1;
  const int sy = homogeneous_grade(y, "y") - 1;
  const int sz = homogeneous_grade(z, "z") - 1;
  auto signed_term = [](bool negative, const Multivector& m) { return negative ? -m : m; };
  return signed_term(odd(sx * sz), super_associator(a, x, y, z)) +
         signed_term(odd(sy * sx), super_associator(a, y, z, x)) +
         signed_term(odd(sz * sy), super_associator(a, z, x, y));
}

namespace {

std::vector<Exponents> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Exponents> out;
  Exponents e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
    if (var == nvars) {
      out.push_back(e);
      return;
    }
    for (unsigned d = 0; d <= left; ++d) {
      e[var] = d;
      rec(var + 1, left - d);
    }
    e[var] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end(), [](const Exponents& l, const Exponents& r) {
    return grlex_greater(r, l);
  });
  return out;
}

struct Sink {
  std::vector<std::string> witnesses;
  std::size_t failures = 0;
  std::size_t cap;
  void fail(std::string w) {
    if (failures++ < cap) witnesses.push_back(std::move(w));
  }
  std::vector<std::string> finish() {
    if (failures > cap) {
      witnesses.push_back("... " + std::to_string(failures - cap) + " further failing samples");
    }
    return std::move(witnesses);
  }
};

}  // namespace

Report check_graded_properties(const LSAlgebroid& a, const SampleSpec& sampling) {
  const std::size_t r = a.rank();
  const std::size_t nv = a.nvars();
  const auto& coords = a.coords();
  std::vector<Multivector> elems;
  const std::vector<Exponents> monos = monomials_up_to(nv, sampling.coeff_degree);
  for (unsigned g = sampling.min_grade; g <= sampling.max_grade && g <= r; ++g) {
    for (const auto& idx : increasing_tuples(r, g)) {
      const Multivector w = Multivector::wedge_of(r, nv, idx);
      for (const auto& m : monos) elems.push_back(Poly::monomial(m, 1) * w);
    }
  }
  const std::size_t n = elems.size();

  std::vector<std::array<std::size_t, 3>> triples;
  bool exhaustive = n * n * n <= sampling.max_exhaustive_triples;
  if (exhaustive) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) triples.push_back({i, j, k});
      }
    }
  } else if (n > 0) {
    std::mt19937_64 rng(sampling.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < sampling.samples; ++s) triples.push_back({pick(rng), pick(rng), pick(rng)});
  }

  Sink ci{{}, 0, sampling.max_witnesses}, leib{{}, 0, sampling.max_witnesses},
      jac{{}, 0, sampling.max_witnesses}, anti{{}, 0, sampling.max_witnesses};
  auto show = [&](const Multivector& m) { return m.to_string(coords); };
  for (const auto& [i, j, k] : triples) {
    const Multivector& x = elems[i];
    const Multivector& y = elems[j];
    const Multivector& z = elems[k];
    const std::string where = "x = " + show(x) + ", y = " + show(y) + ", z = " + show(z);
    const Multivector c = cyclic_identity(a, x, y, z);
    if (!c.is_zero()) ci.fail(format_witness(where + ": CI", show(c), "0"));

    const int gx = x.grade(), gy = y.grade(), gz = z.grade();
    const Multivector lhs = bracket_S(a, x, wedge(y, z));
    Multivector rhs = wedge(bracket_S(a, x, y), z);
    const Multivector second = wedge(y, bracket_S(a, x, z));
    rhs = odd((gx - 1) * gy) ? rhs - second : rhs + second;
    if (!(lhs == rhs)) leib.fail(format_witness(where + ": [x,y^z]", show(lhs), show(rhs)));

    const int sx = gx - 1, sy = gy - 1, sz = gz - 1;
    auto sgn_term = [](bool negative, const Multivector& m) { return negative ? -m : m; };
    const Multivector jsum =
        sgn_term(odd(sx * sz), bracket_S(a, x, bracket_S(a, y, z))) +
        sgn_term(odd(sy * sx), bracket_S(a, y, bracket_S(a, z, x))) +
        sgn_term(odd(sz * sy), bracket_S(a, z, bracket_S(a, x, y)));
    if (!jsum.is_zero()) jac.fail(format_witness(where + ": Jacobi", show(jsum), "0"));

    const Multivector s1 = super_associator(a, x, y, z);
    const Multivector s2 = sgn_term(!odd(sx * sy), super_associator(a, y, x, z));
    const int gs = s1.grade();
    if (!(s1 == s2) || (!s1.is_zero() && gs != sx + sy + sz + 1)) {
      anti.fail(format_witness(where + ": [x,y,z]_S", show(s1), show(s2)));
    }
  }

  Sink red{{}, 0, sampling.max_witnesses};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const Section x = a.basis(i);
      for (const auto& m : monos) {
        const Section y = Poly::monomial(m, 1) * a.basis(j);
        const Multivector lhs = dot_S(a, Multivector::from_section(x), Multivector::from_section(y));
        const Multivector rhs = Multivector::from_section(section_mult(a, x, y));
        if (!(lhs == rhs)) {
          red.fail(format_witness("e" + std::to_string(i + 1) + " ._S " + y.to_string(coords),
                                  show(lhs), show(rhs)));
        }
        const Multivector bl = bracket_S(a, Multivector::from_section(x), Multivector::from_section(y));
        const Multivector br = Multivector::from_section(commutator_bracket(a, x, y));
        if (!(bl == br)) {
          red.fail(format_witness("[e" + std::to_string(i + 1) + "," + y.to_string(coords) + "]_S",
                                  show(bl), show(br)));
        }
      }
    }
  }

  const std::string scope =
      (exhaustive ? "all " + std::to_string(triples.size()) + " triples"
                  : std::to_string(triples.size()) + " sampled triples (seed " +
                        std::to_string(sampling.seed) + ")") +
      " of monomial-coefficient wedges, grades " + std::to_string(sampling.min_grade) + ".." +
      std::to_string(sampling.max_grade) + ", coefficient degree <= " +
      std::to_string(sampling.coeff_degree);
  Report report;
  report.add("CI", "CI(x,y,z) = 0 on " + scope, ci.finish());
  report.add("graded-leibniz", "[x,y^z]_S = [x,y]_S^z + (-1)^{(|x|-1)|y|} y^[x,z]_S on " + scope,
             leib.finish());
  report.add("graded-jacobi", "graded Jacobi identity of [.,.]_S on " + scope, jac.finish());
  report.add("super-associator",
             "[x,y,z]_S = -(-1)^{s(x)s(y)}[y,x,z]_S with s([x,y,z]_S) = s(x)+s(y)+s(z) on " + scope,
             anti.finish());
  report.add("grade-one", "._S and [.,.]_S restrict to the product and commutator on sections",
             red.finish());
  return report;
}

}  // namespace lsakit
