#pragma once

#include <span>
#include <string>
#include <vector>

#include "lsakit/poly.hpp"

namespace lsakit {

/// A polynomial vector field sum_mu X^mu d/dx_mu on the coordinate chart.
class VectorField {
 public:
  VectorField() = default;
  explicit VectorField(std::vector<Poly> components);
  static VectorField zero(std::size_t dim);
  /// The coordinate field d/dx_index.
  static VectorField coordinate(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return components_.size(); }
  const Poly& operator[](std::size_t mu) const { return components_[mu]; }
  const std::vector<Poly>& components() const noexcept { return components_; }
  bool is_zero() const noexcept;

  /// Derivation action X(f).
  Poly apply(const Poly& f) const;

  VectorField operator-() const;
  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(const Poly& f, const VectorField& x);
  friend VectorField operator*(const Rational& s, const VectorField& x);
  friend bool operator==(const VectorField& a, const VectorField& b);

  std::string to_string(std::span<const std::string> coords) const;

 private:
  std::vector<Poly> components_;
};

Poly vf_apply(const VectorField& x, const Poly& f);
/// Commutator of derivations: [X,Y]^mu = X(Y^mu) - Y(X^mu).
VectorField vf_bracket(const VectorField& x, const VectorField& y);

}  // namespace lsakit
