#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "lsakit/algebroid.hpp"
#include "lsakit/cohomology.hpp"
#include "lsakit/representation.hpp"

/// Second implementations used to cross-check the library: elimination over Q and the
/// representation differential of a point algebra written out on frame indices.
namespace oracle {

using lsakit::Rational;

/// Gauss-Jordan elimination over Q: rank and a kernel basis.
struct Elimination {
  std::size_t rank = 0;
  std::vector<std::vector<Rational>> kernel;
};

inline Elimination eliminate(std::vector<std::vector<Rational>> m, std::size_t cols) {
  Elimination out;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (auto& e : m[row]) e *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    out.kernel.push_back(std::move(v));
  }
  return out;
}


/// Constant structure data of a point algebra with a representation.
struct PointData {
  std::size_t r = 0, s = 0;
  std::vector<std::vector<std::vector<Rational>>> c;  // c[i][j][k]
  std::vector<std::vector<std::vector<Rational>>> rho, mu;  // [i][row][col]
};

inline PointData point_data(const lsakit::LSAlgebroid& a, const lsakit::Representation& rep) {
  PointData d;
  d.r = a.rank();
  d.s = rep.rank;
  d.c.assign(d.r, std::vector<std::vector<Rational>>(d.r, std::vector<Rational>(d.r)));
  for (std::size_t i = 0; i < d.r; ++i)
    for (std::size_t j = 0; j < d.r; ++j)
      for (std::size_t k = 0; k < d.r; ++k) d.c[i][j][k] = a.product(i, j)[k].constant_term();
  auto grab = [&](const std::vector<lsakit::PolyMatrix>& ms) {
    std::vector<std::vector<std::vector<Rational>>> out(d.r, std::vector<std::vector<Rational>>(
                                                                 d.s, std::vector<Rational>(d.s)));
    for (std::size_t i = 0; i < d.r; ++i)
      for (std::size_t p = 0; p < d.s; ++p)
        for (std::size_t q = 0; q < d.s; ++q) out[i][p][q] = ms[i](p, q).constant_term();
    return out;
  };
  d.rho = grab(rep.rho);
  d.mu = grab(rep.mu);
  return d;
}

using Vec = std::vector<Rational>;
using Cochain = std::function<Vec(const std::vector<std::size_t>&)>;

/// Skew-slot permutation sign of a frame tuple; 0 on repeats.
inline int perm_sign(std::vector<std::size_t> v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) sign = -sign;
    }
  return sign;
}

/// The differential written out on frame indices of a point algebra. `w` takes k frame
/// indices and returns an E-vector; the result takes k+1.
inline Vec d_oracle(const PointData& d, const Cochain& w, const std::vector<std::size_t>& x) {
  const std::size_t n = x.size() - 1;  // skew slots of the result
  Vec out(d.s, 0);
  auto add = [&](const Vec& v, const Rational& f) {
    for (std::size_t p = 0; p < d.s; ++p) out[p] += f * v[p];
  };
  auto mat = [&](const std::vector<std::vector<Rational>>& m, const Vec& v) {
    Vec o(d.s, 0);
    for (std::size_t p = 0; p < d.s; ++p)
      for (std::size_t q = 0; q < d.s; ++q) o[p] += m[p][q] * v[q];
    return o;
  };
  auto drop = [&](std::initializer_list<std::size_t> idx) {
    std::vector<std::size_t> o;
    for (std::size_t p = 0; p < n; ++p)
      if (std::find(idx.begin(), idx.end(), p) == idx.end()) o.push_back(x[p]);
    return o;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Rational sign = (i % 2 == 0) ? 1 : -1;
    auto args = drop({i});
    args.push_back(x[n]);
    add(mat(d.rho[x[i]], w(args)), sign);
    auto args2 = drop({i});
    args2.push_back(x[i]);
    add(mat(d.mu[x[n]], w(args2)), sign);
    for (std::size_t m = 0; m < d.r; ++m) {
      if (d.c[x[i]][x[n]][m] == 0) continue;
      auto args3 = drop({i});
      args3.push_back(m);
      add(w(args3), -sign * d.c[x[i]][x[n]][m]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Rational sign = ((i + j) % 2 == 0) ? 1 : -1;
      for (std::size_t m = 0; m < d.r; ++m) {
        const Rational b = d.c[x[i]][x[j]][m] - d.c[x[j]][x[i]][m];
        if (b == 0) continue;
        std::vector<std::size_t> args{m};
        for (auto v : drop({i, j})) args.push_back(v);
        args.push_back(x[n]);
        add(w(args), sign * b);
      }
    }
  }
  return out;
}

/// Dense matrix of d: C^k -> C^{k+1} in the (skew tuple, last, component) basis.
inline std::vector<std::vector<Rational>> oracle_matrix(const PointData& d, std::size_t k) {
  const auto cols = lsakit::point_cochain_basis(d.r, d.s, k);
  const auto rows = lsakit::point_cochain_basis(d.r, d.s, k + 1);
  std::vector<std::vector<Rational>> m(rows.size(), std::vector<Rational>(cols.size(), 0));
  for (std::size_t col = 0; col < cols.size(); ++col) {
    const auto& [skew, last, comp] = cols[col];
    const Cochain w = [&](const std::vector<std::size_t>& args) {
      Vec v(d.s, 0);
      std::vector<std::size_t> head(args.begin(), args.end() - 1);
      const int sign = perm_sign(head);
      std::sort(head.begin(), head.end());
      if (sign != 0 && head == skew && args.back() == last) v[comp] = sign;
      return v;
    };
    for (std::size_t row = 0; row < rows.size(); ++row) {
      const auto& [rskew, rlast, rcomp] = rows[row];
      std::vector<std::size_t> x = rskew;
      x.push_back(rlast);
      m[row][col] = d_oracle(d, w, x)[rcomp];
    }
  }
  return m;
}

}  // namespace oracle
