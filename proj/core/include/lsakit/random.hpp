#pragma once

#include <cstdint>
#include <random>

#include "lsakit/cohomology.hpp"
#include "lsakit/matrix.hpp"
#include "lsakit/poly.hpp"
#include "lsakit/section.hpp"
#include "lsakit/vector_field.hpp"

namespace lsakit {

/// Seeded source of random test data. Sequences depend only on the seed, so randomized
/// checks are reproducible across runs and platforms.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Up to `max_terms` monomials of total degree <= max_degree with small integer or
  /// half-integer coefficients; may be zero.
  Poly poly(std::size_t nvars, unsigned max_degree, std::size_t max_terms = 3);
  Section section(std::size_t rank, std::size_t nvars, unsigned max_degree);
  VectorField vector_field(std::size_t nvars, unsigned max_degree);
  PolyMatrix matrix(std::size_t rows, std::size_t cols, std::size_t nvars, unsigned max_degree);
  RepCochain rep_cochain(std::size_t rank, std::size_t erank, std::size_t degree,
                         std::size_t nvars, unsigned max_degree);
  MultiDerivation multiderivation(std::size_t rank, std::size_t degree, std::size_t nvars,
                                  unsigned max_degree);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lsakit
