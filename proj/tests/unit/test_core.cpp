#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/algebroid.hpp"
#include "lsakit/error.hpp"
#include "lsakit/representation.hpp"

using namespace lsakit;

namespace {

/// Associator difference (x,y,z) - (y,x,z).
Section defect(const LSAlgebroid& a, const Section& x, const Section& y, const Section& z) {
  return associator(a, x, y, z) - associator(a, y, x, z);
}

FormCochain random_form(RandomSource& rng, std::size_t rank, std::size_t degree, std::size_t nvars) {
  FormCochain w(rank, degree, nvars);
  for (const auto& idx : increasing_tuples(rank, degree)) w.set(idx, rng.poly(nvars, 2));
  return w;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("section products on the flat and point instances") {
    const auto flat = fx::corpus("flat_r2").algebroid;
    const Section xe2 = fx::section({"0", "x"}, flat.coords());
    CHECK(section_mult(flat, flat.basis(0), xe2) == flat.basis(1));
    CHECK(section_mult(flat, xe2, flat.basis(0)).is_zero());

    const auto point = fx::corpus("point_e1e2").algebroid;
    const Section s = point.basis(0) + point.basis(1);
    CHECK(section_mult(point, s, point.basis(1)) == point.basis(1));

    const auto zero = fx::corpus("zero_r2").algebroid;
    CHECK(section_mult(zero, zero.basis(0), zero.basis(1)).is_zero());
  }

  TEST_CASE("Leibniz rules of the product on random sections") {
    RandomSource rng(21);
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      for (int trial = 0; trial < 10; ++trial) {
        const Section x = rng.section(a.rank(), a.nvars(), 2);
        const Section y = rng.section(a.rank(), a.nvars(), 2);
        const Poly f = rng.poly(a.nvars(), 2);
        CHECK(section_mult(a, x, f * y) ==
              f * section_mult(a, x, y) + a.anchor_of(x).apply(f) * y);
        CHECK(section_mult(a, f * x, y) == f * section_mult(a, x, y));
      }
    }
  }

  TEST_CASE("associator symmetry holds on arbitrary sections of valid instances") {
    RandomSource rng(5);
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      for (int trial = 0; trial < 6; ++trial) {
        const Section x = rng.section(a.rank(), a.nvars(), 2);
        const Section y = rng.section(a.rank(), a.nvars(), 2);
        const Section z = rng.section(a.rank(), a.nvars(), 2);
        CHECK(defect(a, x, y, z).is_zero());
      }
    }
  }

  TEST_CASE("associator defect equals its frame expansion") {
    const auto a = fx::corpus("point_nonexample").algebroid;
    RandomSource rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Section> args{rng.section(2, 0, 0), rng.section(2, 0, 0),
                                      rng.section(2, 0, 0)};
      Section expanded = a.zero_section();
      for_each_frame_expansion(args, [&](const IndexTuple& idx, const Poly& coeff) {
        expanded += coeff * defect(a, a.basis(idx[0]), a.basis(idx[1]), a.basis(idx[2]));
      });
      CHECK(defect(a, args[0], args[1], args[2]) == expanded);
    }
  }

  TEST_CASE("axiom gate") {
    CHECK(check_left_symmetric(fx::corpus("flat_r2").algebroid).passed());
    CHECK(check_left_symmetric(fx::corpus("action_xdx").algebroid).passed());
    CHECK(check_left_symmetric(fx::corpus("zero_r2").algebroid).passed());

    const Report bad = check_left_symmetric(fx::corpus("point_nonexample").algebroid);
    CHECK_FALSE(bad.passed());
    const CheckRecord* assoc = bad.find("associator-symmetry");
    REQUIRE(assoc != nullptr);
    CHECK(assoc->status == Status::Fail);
    CHECK(fx::contains(assoc->witnesses, "(e1,e2,e2) vs (e2,e1,e2)"));
  }

  TEST_CASE("anchor compatibility is tested separately from the frame associators") {
    // x d/dx and d/dx do not commute, while the product is zero.
    const std::vector<std::string> x{"x"};
    std::vector<std::vector<Section>> table(2, std::vector<Section>(2, Section::zero(2, 1)));
    const LSAlgebroid a(x, table,
                        {VectorField({fx::poly("x", x)}), VectorField({fx::poly("1", x)})});
    const Report r = check_left_symmetric(a);
    CHECK(r.find("associator-symmetry")->status == Status::Pass);
    CHECK(r.find("anchor-compatibility")->status == Status::Fail);
    CHECK_THROWS_AS(sub_adjacent(a), Error);
  }

  TEST_CASE("sub-adjacent Lie algebroids") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    const LieAlgebroid g = sub_adjacent(point);
    CHECK(g.bracket(0, 1) == point.basis(1));
    CHECK(g.bracket(1, 0) == -point.basis(1));
    CHECK(g.bracket(0, 0).is_zero());

    const LieAlgebroid flat = sub_adjacent(fx::corpus("flat_r2").algebroid);
    for (const auto& row : flat.table()) {
      for (const auto& b : row) CHECK(b.is_zero());
    }
    CHECK(flat.anchors() == fx::corpus("flat_r2").algebroid.anchors());

    for (const auto& name : fx::valid_names()) {
      CHECK(check_lie_algebroid(sub_adjacent(fx::corpus(name).algebroid)).passed());
    }
    try {
      sub_adjacent(fx::corpus("point_nonexample").algebroid);
      FAIL("expected NotLeftSymmetric");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotLeftSymmetric);
    }
  }

  TEST_CASE("Lie algebroid anchor morphism failure") {
    const std::vector<std::string> x{"x"};
    const Section e1 = Section::basis(2, 0, 1);
    const LieAlgebroid l(x, {{Section::zero(2, 1), e1}, {-e1, Section::zero(2, 1)}},
                         {VectorField::coordinate(1, 0), VectorField::zero(1)});
    const Report r = check_lie_algebroid(l);
    CHECK(r.find("skew-symmetry")->status == Status::Pass);
    CHECK(r.find("jacobi")->status == Status::Pass);
    CHECK(r.find("anchor-morphism")->status == Status::Fail);
  }

  TEST_CASE("left multiplication representation") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    const Representation l = build_left_mult_rep(point);
    CHECK(l.rho[0] == fx::constant_matrix({{0, 0}, {0, 1}}));
    CHECK(l.rho[1].is_zero());
    CHECK(l.mu[0].is_zero());

    const auto flat = fx::corpus("flat_r2").algebroid;
    const Representation lf = build_left_mult_rep(flat);
    CHECK(lf.rho[0].is_zero());
    CHECK(lf.rho[1].is_zero());
    const Section u = fx::section({"x*y", "y^2"}, flat.coords());
    CHECK(rho_act(flat, lf, flat.basis(1), u) == fx::section({"x", "2*y"}, flat.coords()));

    RandomSource rng(13);
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      const LieAlgebroid g = sub_adjacent(a);
      const Representation rep = build_left_mult_rep(a);
      CHECK(check_representation_lie(g, rep));
      for (int trial = 0; trial < 5; ++trial) {
        const Section x = rng.section(a.rank(), a.nvars(), 1);
        const Section y = rng.section(a.rank(), a.nvars(), 1);
        const Section w = rng.section(a.rank(), a.nvars(), 2);
        const Section lhs = rho_act(a, rep, lie_bracket(g, x, y), w);
        const Section rhs = rho_act(a, rep, x, rho_act(a, rep, y, w)) -
                            rho_act(a, rep, y, rho_act(a, rep, x, w));
        CHECK(lhs == rhs);
      }
    }
  }

  TEST_CASE("homomorphisms") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    CHECK(check_lsa_homomorphism(point, point, PolyMatrix::identity(2, 0)));
    for (const Rational& lambda : {Rational(2), Rational(-3), Rational(1, 5)}) {
      CHECK(check_lsa_homomorphism(point, point, fx::constant_matrix({{1, 0}, {0, lambda}})));
    }
    CHECK_FALSE(check_lsa_homomorphism(point, point, fx::constant_matrix({{0, 1}, {1, 0}})));

    const auto flat = fx::corpus("flat_r2").algebroid;
    CHECK_FALSE(check_lsa_homomorphism(flat, flat, PolyMatrix(2, 2, 2)));
    CHECK_THROWS_AS(check_lsa_homomorphism(flat, point, PolyMatrix::identity(2, 2)), Error);
  }

  TEST_CASE("Lie admissibility of point algebras") {
    CHECK(check_lie_admissible(fx::corpus("point_e1e2").algebroid));
    // Matrix units E11, E12, E21, E22 of a 2x2 matrix algebra: E_ab E_cd = delta_bc E_ad.
    std::vector<std::vector<std::vector<int>>> units(4, std::vector<std::vector<int>>(4));
    for (int p = 0; p < 4; ++p) {
      for (int q = 0; q < 4; ++q) {
        std::vector<int> v(4, 0);
        if (p % 2 == q / 2) v[(p / 2) * 2 + q % 2] = 1;
        units[p][q] = v;
      }
    }
    CHECK(check_lie_admissible(fx::point_algebra(units)));

    // e1.e1 = e2, e2.e1 = e1: brute-force the six-term sum.
    const std::vector<std::vector<std::vector<int>>> c{{{0, 1}, {0, 0}}, {{1, 0}, {0, 0}}};
    auto mult = [&](const std::vector<int>& x, const std::vector<int>& y) {
      std::vector<int> out(2, 0);
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          for (int k = 0; k < 2; ++k) out[k] += x[i] * y[j] * c[i][j][k];
      return out;
    };
    auto basis = [](int i) { return std::vector<int>{i == 0, i == 1}; };
    auto assoc = [&](int x, int y, int z) {
      const auto l = mult(mult(basis(x), basis(y)), basis(z));
      const auto r = mult(basis(x), mult(basis(y), basis(z)));
      return std::vector<int>{l[0] - r[0], l[1] - r[1]};
    };
    bool admissible = true;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) {
          const int perms[6][3] = {{x, y, z}, {y, x, z}, {y, z, x}, {z, y, x}, {z, x, y}, {x, z, y}};
          const int signs[6] = {1, -1, 1, -1, 1, -1};
          std::vector<int> sum(2, 0);
          for (int p = 0; p < 6; ++p) {
            const auto v = assoc(perms[p][0], perms[p][1], perms[p][2]);
            sum[0] += signs[p] * v[0];
            sum[1] += signs[p] * v[1];
          }
          if (sum[0] != 0 || sum[1] != 0) admissible = false;
        }
    CHECK(check_lie_admissible(fx::point_algebra(c)) == admissible);
    CHECK_THROWS_AS(check_lie_admissible(fx::corpus("flat_r2").algebroid), Error);
  }

  TEST_CASE("Lie algebroid differential squares to zero") {
    RandomSource rng(17);
    for (const auto& name : fx::valid_names()) {
      const LieAlgebroid g = sub_adjacent(fx::corpus(name).algebroid);
      for (std::size_t k = 0; k + 2 <= g.rank(); ++k) {
        for (int trial = 0; trial < 4; ++trial) {
          const FormCochain w = random_form(rng, g.rank(), k, g.nvars());
          const FormCochain dw = lie_form_d(g, w);
          CHECK(lie_form_d(g, dw).is_zero());
          const std::vector<Section> args{rng.section(g.rank(), g.nvars(), 1),
                                          rng.section(g.rank(), g.nvars(), 1),
                                          rng.section(g.rank(), g.nvars(), 1)};
          const std::span<const Section> used(args.data(), k + 1);
          CHECK(dw.evaluate(used) == lie_form_d_eval(g, w, used));
        }
      }
    }
  }

  TEST_CASE("abelian Lie algebroid with zero anchor has zero differential") {
    const LieAlgebroid l = fx::point_lie({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    FormCochain f(2, 0, 0);
    f.set({}, Poly::constant(0, 3));
    CHECK(lie_form_d(l, f).is_zero());
    FormCochain w(2, 1, 0);
    w.set({0}, Poly::constant(0, 1));
    w.set({1}, Poly::constant(0, -2));
    CHECK(lie_form_d(l, w).is_zero());
    try {
      lie_form_d(l, lie_form_d(l, FormCochain(2, 2, 0)));
      FAIL("expected InvalidDegree");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidDegree);
    }
  }

  TEST_CASE("specialization and parameter extension") {
    const auto a = fx::corpus("action_xdx").algebroid;
    const LSAlgebroid ext = extend_with_parameter(a, "t");
    CHECK(ext.nvars() == 2);
    CHECK(ext.coords().back() == "t");
    CHECK(specialize(ext, 1, Rational(5)).table() == a.table());
    CHECK(check_left_symmetric(ext).passed());
  }
}
