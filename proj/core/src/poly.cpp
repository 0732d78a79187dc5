#include "lsakit/poly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

std::atomic<unsigned> g_max_total_degree{16};

unsigned degree_of(const Exponents& e) noexcept {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept {
    return grlex_greater(a, b);
  }
};

void check_degree(long degree) {
  if (degree > static_cast<long>(g_max_total_degree.load(std::memory_order_relaxed))) {
    throw Error(Errc::DegreeOverflow,
                "total degree " + std::to_string(degree) + " exceeds the configured limit " +
                    std::to_string(g_max_total_degree.load()));
  }
}

}  // namespace

unsigned max_total_degree() noexcept { return g_max_total_degree.load(); }
void set_max_total_degree(unsigned degree) noexcept { g_max_total_degree.store(degree); }

bool grlex_greater(const Exponents& a, const Exponents& b) noexcept {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(std::size_t nvars, const Rational& value) {
  Poly p(nvars);
  if (value != 0) p.terms_.push_back({Exponents(nvars, 0), value});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(Errc::IndexOutOfRange, "variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  Poly p(nvars);
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

Poly Poly::monomial(Exponents exponents, const Rational& coefficient) {
  check_degree(degree_of(exponents));
  Poly p(exponents.size());
  if (coefficient != 0) p.terms_.push_back({std::move(exponents), coefficient});
  return p;
}

Poly Poly::from_unsorted(std::size_t nvars, std::vector<Term> terms) {
  std::map<Exponents, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    auto [it, inserted] = acc.try_emplace(std::move(t.exponents), t.coefficient);
    if (!inserted) it->second += t.coefficient;
  }
  Poly p(nvars);
  p.terms_.reserve(acc.size());
  for (auto& [e, c] : acc) {
    if (c != 0) p.terms_.push_back({e, c});
  }
  return p;
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.front().exponents) == 0);
}

bool Poly::is_one() const {
  return is_constant() && !terms_.empty() && terms_.front().coefficient == 1;
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return Rational(0);
  const Term& last = terms_.back();
  return degree_of(last.exponents) == 0 ? last.coefficient : Rational(0);
}

int Poly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return static_cast<int>(degree_of(terms_.front().exponents));
}

void Poly::promote_to(std::size_t nvars) {
  for (auto& t : terms_) t.exponents.resize(nvars, 0);
  nvars_ = nvars;
}

std::size_t common_nvars(Poly& a, Poly& b) {
  if (a.nvars_ == b.nvars_) return a.nvars_;
  if (a.is_constant() && a.nvars_ < b.nvars_) {
    a.promote_to(b.nvars_);
    return b.nvars_;
  }
  if (b.is_constant() && b.nvars_ < a.nvars_) {
    b.promote_to(a.nvars_);
    return a.nvars_;
  }
  throw Error(Errc::DimensionMismatch, "polynomials live in different coordinate rings (" +
                                           std::to_string(a.nvars_) + " vs " +
                                           std::to_string(b.nvars_) + " variables)");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.is_zero() && other.nvars_ <= nvars_) return *this;
  Poly rhs = other;
  common_nvars(*this, rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() && b != rhs.terms_.end()) {
    if (a->exponents == b->exponents) {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) merged.push_back({std::move(a->exponents), std::move(c)});
      ++a;
      ++b;
    } else if (grlex_greater(a->exponents, b->exponents)) {
      merged.push_back(std::move(*a++));
    } else {
      merged.push_back(std::move(*b++));
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != rhs.terms_.end(); ++b) merged.push_back(std::move(*b));
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= scalar;
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly operator*(const Poly& a_in, const Poly& b_in) {
  Poly a = a_in;
  Poly b = b_in;
  const std::size_t n = common_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(n);
  check_degree(static_cast<long>(a.total_degree()) + b.total_degree());
  if (b.is_constant()) return a *= b.terms_.front().coefficient;
  if (a.is_constant()) return b *= a.terms_.front().coefficient;

  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[k] = s.exponents[k] + t.exponents[k];
      products.push_back({std::move(e), s.coefficient * t.coefficient});
    }
  }
  return Poly::from_unsorted(n, std::move(products));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.nvars_ != b.nvars_ && !(a.is_constant() && b.is_constant())) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (a.nvars_ == b.nvars_ && a.terms_[i].exponents != b.terms_[i].exponents) return false;
  }
  return true;
}

Poly Poly::pow(unsigned exponent) const {
  if (exponent == 0) return Poly::constant(nvars_, 1);
  if (!is_zero()) check_degree(static_cast<long>(total_degree()) * exponent);
  Poly result = Poly::constant(nvars_, 1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent != 0) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) {
    throw Error(Errc::IndexOutOfRange, "partial derivative index " + std::to_string(var) +
                                           " with " + std::to_string(nvars_) + " variables");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.exponents[var] == 0) continue;
    Term d{t.exponents, t.coefficient * t.exponents[var]};
    d.exponents[var] -= 1;
    out.push_back(std::move(d));
  }
  // Lowering one exponent can reorder terms of different degree; re-sort.
  return from_unsorted(nvars_, std::move(out));
}

Poly Poly::specialize(std::size_t var, const Rational& value) const {
  if (var >= nvars_) throw Error(Errc::IndexOutOfRange, "specialization index out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    for (std::uint32_t k = 0; k < t.exponents[var]; ++k) c *= value;
    if (c == 0) continue;
    Exponents e;
    e.reserve(nvars_ - 1);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (k != var) e.push_back(t.exponents[k]);
    }
    out.push_back({std::move(e), std::move(c)});
  }
  return from_unsorted(nvars_ - 1, std::move(out));
}

Poly Poly::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(Errc::DimensionMismatch, "cannot shrink a coordinate ring");
  Poly r = *this;
  r.promote_to(nvars);
  return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Poly::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(t.coefficient);
    bool wrote = false;
    if (mag != 1 || degree_of(t.exponents) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t k = 0; k < t.exponents.size(); ++k) {
      if (t.exponents[k] == 0) continue;
      if (wrote) os << '*';
      os << (k < names.size() ? names[k] : "x" + std::to_string(k + 1));
      if (t.exponents[k] > 1) os << '^' << t.exponents[k];
      wrote = true;
    }
  }
  return os.str();
}

Poly partial_derivative(const Poly& p, std::size_t var) { return p.derivative(var); }

}  // namespace lsakit
