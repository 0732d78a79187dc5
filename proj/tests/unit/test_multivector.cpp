#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/multivector.hpp"

using namespace lsakit;

namespace {

Multivector mv(const Section& s) { return Multivector::from_section(s); }

Multivector wedge_all(std::size_t rank, std::size_t nvars, const std::vector<Section>& xs) {
  Multivector out = Multivector::function(rank, Poly::constant(nvars, 1));
  for (const auto& x : xs) out = wedge(out, mv(x));
  return out;
}

/// (x1^..^xk) . (y1^..^yl) = sum_{i,j} (-1)^{i+j} (xi.yj) ^ x1..^xi..xk ^ y1..^yj..yl,
/// evaluated with the section product on arbitrary sections.
Multivector decomposable_product(const LSAlgebroid& a, const std::vector<Section>& xs,
                                 const std::vector<Section>& ys) {
  Multivector out(a.rank(), a.nvars());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      std::vector<Section> rest{section_mult(a, xs[i], ys[j])};
      for (std::size_t p = 0; p < xs.size(); ++p)
        if (p != i) rest.push_back(xs[p]);
      for (std::size_t q = 0; q < ys.size(); ++q)
        if (q != j) rest.push_back(ys[q]);
      const Multivector term = wedge_all(a.rank(), a.nvars(), rest);
      out += ((i + j) % 2 == 0) ? term : -term;
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("multivector") {
  TEST_CASE("wedge products") {
    const std::vector<std::string> xy{"x", "y"};
    const Multivector e1 = Multivector::wedge_of(2, 2, {0});
    const Multivector e2 = Multivector::wedge_of(2, 2, {1});
    CHECK(wedge(e1, e1).is_zero());
    CHECK((wedge(e1, e2) + wedge(e2, e1)).is_zero());
    CHECK(wedge(fx::poly("x", xy) * e1, fx::poly("y^2", xy) * e2) ==
          fx::poly("x*y^2", xy) * Multivector::wedge_of(2, 2, {0, 1}));
    CHECK(Multivector::wedge_of(3, 0, {2, 0, 1}) == Multivector::wedge_of(3, 0, {0, 1, 2}));
    CHECK(Multivector::wedge_of(3, 0, {1, 0, 2}) == -Multivector::wedge_of(3, 0, {0, 1, 2}));

    RandomSource rng(4);
    for (int trial = 0; trial < 20; ++trial) {
      const Multivector x = wedge_all(3, 1, {rng.section(3, 1, 1)});
      const Multivector y = wedge_all(3, 1, {rng.section(3, 1, 1), rng.section(3, 1, 1)});
      const Multivector z = wedge_all(3, 1, {rng.section(3, 1, 1)});
      CHECK(wedge(x, y) == wedge(y, x));
      CHECK(wedge(x, z) == -wedge(z, x));
      CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
    }
  }

  TEST_CASE("products with functions") {
    const auto a = fx::corpus("action_xdx").algebroid;
    const Poly f = fx::poly("x^3 + 2*x", a.coords());
    const Multivector e = mv(a.basis(0));
    const Multivector fm = Multivector::function(1, f);
    CHECK(dot_S(a, e, fm) == Multivector::function(1, fx::poly("3*x^3 + 2*x", a.coords())));
    CHECK(dot_S(a, fm, e).is_zero());
    CHECK(bracket_S(a, e, fm) == dot_S(a, e, fm));
    CHECK(dot_S(a, fm, fm).is_zero());
  }

  TEST_CASE("grade-one products are the section product and bracket") {
    RandomSource rng(9);
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      const LieAlgebroid g = sub_adjacent(a);
      for (int trial = 0; trial < 5; ++trial) {
        const Section x = rng.section(a.rank(), a.nvars(), 2);
        const Section y = rng.section(a.rank(), a.nvars(), 2);
        CHECK(dot_S(a, mv(x), mv(y)) == mv(section_mult(a, x, y)));
        CHECK(bracket_S(a, mv(x), mv(y)) == mv(lie_bracket(g, x, y)));
      }
    }
  }

  TEST_CASE("point algebra example") {
    const auto a = fx::corpus("point_e1e2").algebroid;
    const Multivector e12 = Multivector::wedge_of(2, 0, {0, 1});
    CHECK(dot_S(a, e12, mv(a.basis(1))).is_zero());
    // e1 . (e1^e2) = (e1.e1)^e2 - (e1.e2)^e1 = e1^e2.
    CHECK(dot_S(a, mv(a.basis(0)), e12) == e12);
    // Shifted-odd elements bracket to zero with themselves.
    const Multivector x = mv(a.basis(0) + a.basis(1));
    CHECK(bracket_S(a, x, x).is_zero());
  }

  TEST_CASE("decomposable formula on arbitrary sections") {
    RandomSource rng(31);
    for (const char* name : {"flat_r2", "point_e1e2", "action_xdx", "quadratic_r2"}) {
      const auto a = fx::corpus(name).algebroid;
      for (std::size_t k = 1; k <= a.rank(); ++k) {
        for (std::size_t l = 1; l <= a.rank(); ++l) {
          std::vector<Section> xs, ys;
          for (std::size_t i = 0; i < k; ++i) xs.push_back(rng.section(a.rank(), a.nvars(), 1));
          for (std::size_t j = 0; j < l; ++j) ys.push_back(rng.section(a.rank(), a.nvars(), 1));
          const Multivector lhs =
              dot_S(a, wedge_all(a.rank(), a.nvars(), xs), wedge_all(a.rank(), a.nvars(), ys));
          CHECK_MESSAGE(lhs == decomposable_product(a, xs, ys), name << " grades " << k << "," << l);
        }
      }
    }
  }

  TEST_CASE("graded Leibniz rule and super associators on random elements") {
    RandomSource rng(12);
    const auto a = fx::corpus("flat_r2").algebroid;
    for (int trial = 0; trial < 10; ++trial) {
      const Multivector x = mv(rng.section(2, 2, 1));
      const Multivector y = mv(rng.section(2, 2, 1));
      const Multivector z = Multivector::function(2, rng.poly(2, 2));
      // [x, y^z]_S = [x,y]_S ^ z + (-1)^{(|x|-1)|y|} y ^ [x,z]_S with |x| = |y| = 1.
      CHECK(bracket_S(a, x, wedge(y, z)) == wedge(bracket_S(a, x, y), z) + wedge(y, bracket_S(a, x, z)));
      CHECK(super_associator(a, x, y, z) == -super_associator(a, y, x, z));
      CHECK(cyclic_identity(a, x, y, z).is_zero());
    }
  }

  TEST_CASE("graded properties on the instances") {
    SampleSpec sampling;
    for (const char* name : {"zero_r2", "flat_r2", "point_e1e2", "action_xdx"}) {
      const Report r = check_graded_properties(fx::corpus(name).algebroid, sampling);
      CHECK_MESSAGE(r.passed(), name);
      for (const char* rec : {"CI", "graded-leibniz", "graded-jacobi", "super-associator", "grade-one"}) {
        CHECK_MESSAGE(r.find(rec) != nullptr, rec);
      }
    }
  }
}
