#include "lsakit/section.hpp"

#include <sstream>

#include "lsakit/error.hpp"

namespace lsakit {

Section::Section(std::vector<Poly> components) : components_(std::move(components)) {}

Section Section::zero(std::size_t rank, std::size_t nvars) {
  return Section(std::vector<Poly>(rank, Poly(nvars)));
}

Section Section::basis(std::size_t rank, std::size_t index, std::size_t nvars) {
  if (index >= rank) throw Error(Errc::IndexOutOfRange, "frame index out of range");
  Section s = zero(rank, nvars);
  s.components_[index] = Poly::constant(nvars, 1);
  return s;
}

bool Section::is_zero() const noexcept {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Section Section::operator-() const {
  Section r = *this;
  for (auto& c : r.components_) c = -c;
  return r;
}

Section& Section::operator+=(const Section& other) {
  if (rank() != other.rank()) {
    throw Error(Errc::DimensionMismatch, "sections of rank " + std::to_string(rank()) + " and " +
                                             std::to_string(other.rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) components_[i] += other.components_[i];
  return *this;
}

Section& Section::operator-=(const Section& other) {
  if (rank() != other.rank()) {
    throw Error(Errc::DimensionMismatch, "sections of rank " + std::to_string(rank()) + " and " +
                                             std::to_string(other.rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) components_[i] -= other.components_[i];
  return *this;
}

Section operator*(const Poly& f, const Section& s) {
  if (f.is_one()) return s;
  Section r = s;
  for (auto& c : r.components_) {
    if (!c.is_zero()) c = f * c;
  }
  return r;
}

Section operator*(const Rational& q, const Section& s) {
  Section r = s;
  for (auto& c : r.components_) c *= q;
  return r;
}

bool operator==(const Section& a, const Section& b) { return a.components_ == b.components_; }

std::string Section::to_string(std::span<const std::string> coords, std::string_view frame) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < rank(); ++i) {
    const Poly& c = components_[i];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << '(' << c.to_string(coords) << ")*";
    os << frame << (i + 1);
  }
  return first ? "0" : os.str();
}

Section concat(const Section& head, const Section& tail) {
  std::vector<Poly> out = head.components();
  out.insert(out.end(), tail.components().begin(), tail.components().end());
  return Section(std::move(out));
}

}  // namespace lsakit
