#pragma once

#include <string>
#include <vector>

#include "lsakit/algebroid.hpp"
#include "point_oracle.hpp"
#include "lsakit/parser.hpp"
#include "lsakit/random.hpp"
#include "lsakit_cli/instance.hpp"
#include "lsakit_cli/suite.hpp"

namespace fx {

inline lsakit::cli::Instance corpus(const std::string& name) {
  return lsakit::cli::load_instance(std::string(LSAKIT_CORPUS_DIR) + "/" + name + ".json");
}

/// Corpus instances that satisfy the axioms.
inline const std::vector<std::string>& valid_names() {
  static const std::vector<std::string> names{"flat_r2",  "action_xdx", "point_e1e2",
                                              "zero_r2",  "unit_r1",    "quadratic_r2"};
  return names;
}

inline lsakit::Poly poly(const std::string& text, const std::vector<std::string>& coords) {
  return lsakit::parse_poly(text, coords).extended(coords.size());
}

inline lsakit::Section section(const std::vector<std::string>& comps,
                               const std::vector<std::string>& coords) {
  std::vector<lsakit::Poly> ps;
  for (const auto& c : comps) ps.push_back(poly(c, coords));
  return lsakit::Section(std::move(ps));
}

inline lsakit::PolyMatrix matrix(const std::vector<std::vector<std::string>>& rows,
                                 const std::vector<std::string>& coords) {
  lsakit::PolyMatrix m(rows.size(), rows.front().size(), coords.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = poly(rows[i][j], coords);
  }
  return m;
}

/// Point algebra from constant structure vectors: products[i][j] = e_i . e_j.
inline lsakit::LSAlgebroid point_algebra(const std::vector<std::vector<std::vector<int>>>& products) {
  const std::size_t r = products.size();
  std::vector<std::vector<lsakit::Section>> table(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<lsakit::Poly> comps;
      for (int c : products[i][j]) comps.push_back(lsakit::Poly::constant(0, c));
      table[i].push_back(lsakit::Section(std::move(comps)));
    }
  }
  return lsakit::LSAlgebroid({}, std::move(table), std::vector<lsakit::VectorField>(r));
}

/// Point Lie algebroid view of a point algebra's commutator.
inline lsakit::LieAlgebroid point_lie(const std::vector<std::vector<std::vector<int>>>& brackets) {
  const lsakit::LSAlgebroid a = point_algebra(brackets);
  return lsakit::LieAlgebroid({}, a.table(), a.anchors());
}

inline lsakit::PolyMatrix constant_matrix(const std::vector<std::vector<lsakit::Rational>>& rows,
                                          std::size_t nvars = 0) {
  lsakit::PolyMatrix m(rows.size(), rows.front().size(), nvars);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = lsakit::Poly::constant(nvars, rows[i][j]);
  }
  return m;
}

inline bool contains(const std::vector<std::string>& haystack, const std::string& needle) {
  for (const auto& h : haystack) {
    if (h.find(needle) != std::string::npos) return true;
  }
  return false;
}

}  // namespace fx
