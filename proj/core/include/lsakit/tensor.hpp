#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lsakit/poly.hpp"
#include "lsakit/section.hpp"

namespace lsakit {

using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples drawn from {0..n-1}, in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k);

/// Sorts in place and returns the permutation sign, or 0 if an index repeats.
int sort_with_sign(IndexTuple& idx);

std::size_t binomial(std::size_t n, std::size_t k);

/// Expands C-infinity-multilinear arguments over the constant frame: calls
/// fn(indices, coefficient) once per combination of nonzero components, where the
/// coefficient is the product of the chosen components.
void for_each_frame_expansion(std::span<const Section> args,
                              const std::function<void(const IndexTuple&, const Poly&)>& fn);

/// `xs` with the entries at the listed positions removed.
std::vector<Section> without(std::span<const Section> xs, std::initializer_list<std::size_t> drop);

/// "(e1,e2,e3)" style label for frame tuples (1-based in print).
std::string frame_label(const IndexTuple& idx, const char* frame = "e");

}  // namespace lsakit
