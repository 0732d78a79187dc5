#include "lsakit/random.hpp"

namespace lsakit {

std::int64_t RandomSource::integer(std::int64_t lo, std::int64_t hi) {
  // Plain modulo keeps the sequence identical across standard libraries.
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Poly RandomSource::poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms) {
  Poly out(nvars);
  const auto terms = static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(max_terms)));
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    if (nvars > 0) {
      auto degree = static_cast<unsigned>(integer(0, max_degree));
      while (degree-- > 0) ++e[static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(nvars) - 1))];
    }
    std::int64_t num = integer(-3, 3);
    if (num == 0) num = 1;
    Rational coeff(num, integer(1, 2));
    coeff.canonicalize();
    out += Poly::monomial(std::move(e), coeff);
  }
  return out;
}

Section RandomSource::section(std::size_t rank, std::size_t nvars, unsigned max_degree) {
  std::vector<Poly> comps;
  comps.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) comps.push_back(poly(nvars, max_degree));
  return Section(std::move(comps));
}

VectorField RandomSource::vector_field(std::size_t nvars, unsigned max_degree) {
  std::vector<Poly> comps;
  comps.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) comps.push_back(poly(nvars, max_degree));
  return VectorField(std::move(comps));
}

PolyMatrix RandomSource::matrix(std::size_t rows, std::size_t cols, std::size_t nvars,
                                unsigned max_degree) {
  PolyMatrix m(rows, cols, nvars);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = poly(nvars, max_degree, 2);
  }
  return m;
}

RepCochain RandomSource::rep_cochain(std::size_t rank, std::size_t erank, std::size_t degree,
                                     std::size_t nvars, unsigned max_degree) {
  RepCochain w(rank, erank, degree, nvars);
  for (const auto& skew : increasing_tuples(rank, degree - 1)) {
    for (std::size_t j = 0; j < rank; ++j) w.set(skew, j, section(erank, nvars, max_degree));
  }
  return w;
}

MultiDerivation RandomSource::multiderivation(std::size_t rank, std::size_t degree,
                                              std::size_t nvars, unsigned max_degree) {
  MultiDerivation d(rank, degree, nvars);
  for (const auto& skew : increasing_tuples(rank, degree - 1)) {
    for (std::size_t j = 0; j < rank; ++j) d.set_value(skew, j, section(rank, nvars, max_degree));
    d.set_symbol(skew, vector_field(nvars, max_degree));
  }
  return d;
}

}  // namespace lsakit
