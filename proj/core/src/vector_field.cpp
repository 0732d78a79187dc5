#include "lsakit/vector_field.hpp"

#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

namespace {

void require_same_dim(const VectorField& a, const VectorField& b) {
  if (a.dim() != b.dim()) {
    throw Error(Errc::DimensionMismatch, "vector fields on charts of dimension " +
                                             std::to_string(a.dim()) + " and " +
                                             std::to_string(b.dim()));
  }
}

}  // namespace

VectorField::VectorField(std::vector<Poly> components) : components_(std::move(components)) {}

VectorField VectorField::zero(std::size_t dim) {
  return VectorField(std::vector<Poly>(dim, Poly(dim)));
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t index) {
  if (index >= dim) throw Error(Errc::IndexOutOfRange, "coordinate field index out of range");
  VectorField v = zero(dim);
  v.components_[index] = Poly::constant(dim, 1);
  return v;
}

bool VectorField::is_zero() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Poly VectorField::apply(const Poly& f) const {
  if (f.is_constant()) return Poly(dim());
  if (f.nvars() != dim()) {
    throw Error(Errc::DimensionMismatch, "vector field of dimension " + std::to_string(dim()) +
                                             " applied to a polynomial in " +
                                             std::to_string(f.nvars()) + " variables");
  }
  Poly out(dim());
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    if (components_[mu].is_zero()) continue;
    Poly d = f.derivative(mu);
    if (!d.is_zero()) out += components_[mu] * d;
  }
  return out;
}

VectorField VectorField::operator-() const {
  VectorField r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  require_same_dim(*this, other);
  for (std::size_t mu = 0; mu < dim(); ++mu) components_[mu] += other.components_[mu];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  require_same_dim(*this, other);
  for (std::size_t mu = 0; mu < dim(); ++mu) components_[mu] -= other.components_[mu];
  return *this;
}

VectorField operator*(const Poly& f, const VectorField& x) {
  VectorField r = x;
  if (f.is_one()) return r;
  for (auto& c : r.components_) c = f * c;
  return r;
}

VectorField operator*(const Rational& s, const VectorField& x) {
  VectorField r = x;
  for (auto& c : r.components_) c *= s;
  return r;
}

bool operator==(const VectorField& a, const VectorField& b) {
  return a.components_ == b.components_;
}

std::string VectorField::to_string(std::span<const std::string> coords) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t mu = 0; mu < dim(); ++mu) {
    if (components_[mu].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string name = mu < coords.size() ? coords[mu] : "x" + std::to_string(mu + 1);
    os << '(' << components_[mu].to_string(coords) << ")*d/d" << name;
  }
  return first ? "0" : os.str();
}

Poly vf_apply(const VectorField& x, const Poly& f) { return x.apply(f); }

VectorField vf_bracket(const VectorField& x, const VectorField& y) {
  require_same_dim(x, y);
  std::vector<Poly> out(x.dim(), Poly(x.dim()));
  for (std::size_t mu = 0; mu < x.dim(); ++mu) {
    out[mu] = x.apply(y[mu]) - y.apply(x[mu]);
  }
  return VectorField(std::move(out));
}

}  // namespace lsakit
