#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lsakit/poly.hpp"

namespace lsakit {

/// A section of a trivial bundle, expanded over the constant frame e_1..e_r.
class Section {
 public:
  Section() = default;
  explicit Section(std::vector<Poly> components);
  static Section zero(std::size_t rank, std::size_t nvars);
  /// The constant frame section e_index (0-based).
  static Section basis(std::size_t rank, std::size_t index, std::size_t nvars);

  std::size_t rank() const noexcept { return components_.size(); }
  const Poly& operator[](std::size_t i) const { return components_[i]; }
  Poly& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Poly>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  Section operator-() const;
  Section& operator+=(const Section& other);
  Section& operator-=(const Section& other);
  friend Section operator+(Section a, const Section& b) { return a += b; }
  friend Section operator-(Section a, const Section& b) { return a -= b; }
  friend Section operator*(const Poly& f, const Section& s);
  friend Section operator*(const Rational& q, const Section& s);
  friend bool operator==(const Section& a, const Section& b);

  /// e.g. "(x)*e1 - e2"; `frame` names the basis symbols.
  std::string to_string(std::span<const std::string> coords, std::string_view frame = "e") const;

 private:
  std::vector<Poly> components_;
};

/// Block concatenation (x, u) of sections of A and E into a section of A (+) E.
Section concat(const Section& head, const Section& tail);

}  // namespace lsakit
