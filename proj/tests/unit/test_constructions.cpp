#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/constructions.hpp"
#include "lsakit/error.hpp"
#include "lsakit/representation.hpp"

using namespace lsakit;

namespace {

// e1.e1 = e1, e1.e2 = e2: associative, with right multiplications that do not commute.
const std::vector<std::vector<std::vector<int>>> kLeftUnit{{{1, 0}, {0, 1}}, {{0, 0}, {0, 0}}};

Representation left_right(const LSAlgebroid& a) {
  Representation rep = build_left_mult_rep(a);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    std::vector<Section> cols;
    for (std::size_t j = 0; j < a.rank(); ++j) cols.push_back(a.product(j, i));
    rep.mu[i] = PolyMatrix::from_columns(cols, a.nvars());
  }
  return rep;
}

/// [Nx,Ny] - N([Nx,y] + [x,Ny] - N[x,y]) on constant structure data.
bool nijenhuis_oracle(const std::vector<std::vector<std::vector<int>>>& b,
                      const std::vector<std::vector<int>>& n) {
  const std::size_t r = n.size();
  using Vec = std::vector<long>;
  auto apply = [&](const Vec& v) {
    Vec out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) out[i] += n[i][j] * v[j];
    return out;
  };
  auto br = [&](const Vec& x, const Vec& y) {
    Vec out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        for (std::size_t k = 0; k < r; ++k) out[k] += x[i] * y[j] * b[i][j][k];
    return out;
  };
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      Vec x(r, 0), y(r, 0);
      x[i] = 1;
      y[j] = 1;
      const Vec lhs = br(apply(x), apply(y));
      const Vec inner1 = br(apply(x), y), inner2 = br(x, apply(y)), inner3 = apply(br(x, y));
      Vec inner(r);
      for (std::size_t k = 0; k < r; ++k) inner[k] = inner1[k] + inner2[k] - inner3[k];
      if (lhs != apply(inner)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("Lie representation checks") {
    const LieAlgebroid abelian = fx::point_lie({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    Representation rep = Representation::zero(2, 2, 0);
    CHECK(check_representation_lie(abelian, rep));
    rep.rho[0] = fx::constant_matrix({{0, 1}, {0, 0}});
    rep.rho[1] = fx::constant_matrix({{0, 0}, {1, 0}});
    CHECK_FALSE(check_representation_lie(abelian, rep));
    try {
      dual_rep(abelian, rep);
      FAIL("expected NotARepresentation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotARepresentation);
    }
  }

  TEST_CASE("dual representations") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    const LieAlgebroid g = sub_adjacent(point);
    const Representation l = build_left_mult_rep(point);
    const Representation ld = dual_rep(g, l);
    CHECK(ld.rho[0] == fx::constant_matrix({{0, 0}, {0, -1}}));
    CHECK(dual_rep(g, ld) == l);
    CHECK(dual_rep(g, Representation::zero(2, 3, 0)) == Representation::zero(2, 3, 0));

    // <rho*(x) xi, y> = a(x)<xi, y> - <xi, rho(x) y> on the flat instance.
    const auto flat = fx::corpus("flat_r2").algebroid;
    const Representation lf = build_left_mult_rep(flat);
    const Representation lfd = dual_rep(sub_adjacent(flat), lf);
    const Section xi = fx::section({"x^2", "y"}, flat.coords());
    const Section y = fx::section({"y", "x*y"}, flat.coords());
    for (std::size_t i = 0; i < 2; ++i) {
      const Section x = flat.basis(i);
      auto pair = [](const Section& p, const Section& q) { return p[0] * q[0] + p[1] * q[1]; };
      CHECK(pair(rho_act(flat, lfd, x, xi), y) ==
            flat.anchor_of(x).apply(pair(xi, y)) - pair(xi, rho_act(flat, lf, x, y)));
    }
  }

  TEST_CASE("left-symmetric representations") {
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      CHECK(check_representation_lsa(a, build_left_mult_rep(a)));
    }
    // (A; L, R) on a point algebra satisfies the compatibility identity.
    const LSAlgebroid lu = fx::point_algebra(kLeftUnit);
    CHECK(check_representation_lsa(lu, left_right(lu)));
    // Off a point, right multiplication is not C-infinity-linear.
    const Report rm = right_multiplication_report(fx::corpus("flat_r2").algebroid);
    CHECK(rm.find("tensorial")->status == Status::Fail);
  }

  TEST_CASE("derived representations") {
    const auto flat = fx::corpus("flat_r2").algebroid;
    const DerivedReps d = derived_reps(flat, build_left_mult_rep(flat));
    CHECK(d.minus_mu_rep);
    CHECK(d.dual_rep);
    CHECK(d.mu_commutes);
    CHECK(d.rep2 == dual_rep(sub_adjacent(flat), build_left_mult_rep(flat)));

    const LSAlgebroid lu = fx::point_algebra(kLeftUnit);
    const DerivedReps e = derived_reps(lu, left_right(lu));
    CHECK_FALSE(e.minus_mu_rep);
    CHECK_FALSE(e.dual_rep);
    CHECK_FALSE(e.mu_commutes);

    for (const auto& name : fx::valid_names()) {
      const auto inst = fx::corpus(name);
      const DerivedReps r = derived_reps(inst.algebroid, lsakit::cli::complex_representation(inst));
      CHECK(r.minus_mu_rep == r.dual_rep);
      CHECK(r.dual_rep == r.mu_commutes);
    }
  }

  TEST_CASE("action algebroids") {
    const std::vector<std::string> x{"x"};
    const LSAlgebroid g = fx::point_algebra({{{1}}});
    const LSAlgebroid act = action_algebroid(g, {VectorField({fx::poly("x", x)})}, x);
    CHECK(act.table() == fx::corpus("action_xdx").algebroid.table());
    CHECK(act.anchors() == fx::corpus("action_xdx").algebroid.anchors());
    CHECK(check_left_symmetric(act).passed());

    const LSAlgebroid flat1 = action_algebroid(fx::point_algebra({{{0}}}),
                                               {VectorField::coordinate(1, 0)}, x);
    CHECK(check_left_symmetric(flat1).passed());
    CHECK(check_lie_algebroid(sub_adjacent(flat1)).passed());

    const LSAlgebroid zero = action_algebroid(fx::point_algebra({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}}),
                                              {VectorField::zero(1), VectorField::zero(1)}, x);
    CHECK(zero.table()[0][1].is_zero());

    try {
      action_algebroid(fx::corpus("point_e1e2").algebroid,
                       {VectorField::coordinate(1, 0), VectorField::coordinate(1, 0)}, x);
      FAIL("expected NotAnAction");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAnAction);
    }
  }

  TEST_CASE("O-operators") {
    const LieAlgebroid abelian = fx::point_lie({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    const OOperatorResult triv =
        apply_O_operator(abelian, Representation::zero(2, 2, 0), fx::constant_matrix({{1, 2}, {3, 4}}));
    CHECK(triv.is_O);
    CHECK(triv.induced.table()[1][1].is_zero());

    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      const LieAlgebroid g = sub_adjacent(a);
      const Representation l = build_left_mult_rep(a);
      const OOperatorResult id = apply_O_operator(g, l, PolyMatrix::identity(a.rank(), a.nvars()));
      CHECK(id.is_O);
      CHECK(id.T_homomorphism);
      CHECK(id.induced.table() == a.table());
      CHECK(id.report.passed());
      const PolyMatrix lift = o_operator_lift(PolyMatrix::identity(a.rank(), a.nvars()));
      CHECK(check_lie_nijenhuis(semidirect_lie(g, l), lift));

      const OOperatorResult zero = apply_O_operator(g, l, PolyMatrix(a.rank(), a.rank(), a.nvars()));
      CHECK(zero.is_O);
      for (const auto& row : zero.induced.table()) {
        for (const auto& s : row) CHECK(s.is_zero());
      }
    }

    // With ad instead of L, T = id asks for [u,v] = 2[u,v].
    const LSAlgebroid p = fx::corpus("point_e1e2").algebroid;
    const LieAlgebroid g = sub_adjacent(p);
    Representation ad = Representation::zero(2, 2, 0);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t k = 0; k < 2; ++k) ad.rho[i](k, j) = g.bracket(i, j)[k];
      }
    }
    CHECK(representation_lie_report(g, ad).passed());
    CHECK_FALSE(apply_O_operator(g, ad, PolyMatrix::identity(2, 0)).is_O);
  }

  TEST_CASE("Lie Nijenhuis operators") {
    const LieAlgebroid g = sub_adjacent(fx::corpus("point_e1e2").algebroid);
    CHECK(check_lie_nijenhuis(g, PolyMatrix::identity(2, 0)));
    CHECK(check_lie_nijenhuis(g, Rational(7, 3) * PolyMatrix::identity(2, 0)));
    // In dimension two every operator is Nijenhuis (Cayley-Hamilton), so compare on
    // the Heisenberg algebra [e1,e2] = e3.
    const std::vector<std::vector<std::vector<int>>> b{
        {{0, 0, 0}, {0, 0, 1}, {0, 0, 0}},
        {{0, 0, -1}, {0, 0, 0}, {0, 0, 0}},
        {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}};
    const LieAlgebroid l = fx::point_lie(b);
    REQUIRE(check_lie_algebroid(l).passed());
    int disagreements = 0, failures = 0;
    for (unsigned bits = 0; bits < 512; ++bits) {
      std::vector<std::vector<int>> n(3, std::vector<int>(3));
      std::vector<std::vector<Rational>> q(3, std::vector<Rational>(3));
      for (unsigned e = 0; e < 9; ++e) {
        n[e / 3][e % 3] = (bits >> e) & 1u;
        q[e / 3][e % 3] = n[e / 3][e % 3];
      }
      const bool expected = nijenhuis_oracle(b, n);
      if (!expected) ++failures;
      if (check_lie_nijenhuis(l, fx::constant_matrix(q)) != expected) ++disagreements;
    }
    CHECK(disagreements == 0);
    CHECK(failures > 0);
  }

  TEST_CASE("semidirect products") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    const LieAlgebroid g = sub_adjacent(point);
    const LieAlgebroid s = semidirect_lie(g, dual_rep(g, build_left_mult_rep(point)));
    CHECK(s.rank() == 4);
    CHECK(s.bracket(0, 3) == -Section::basis(4, 3, 0));
    CHECK(check_lie_algebroid(s).passed());

    const LieAlgebroid ab = fx::point_lie({{{0}}});
    Representation nil = Representation::zero(1, 2, 0);
    nil.rho[0] = fx::constant_matrix({{0, 1}, {0, 0}});
    const LieAlgebroid heis = semidirect_lie(ab, nil);
    CHECK(heis.bracket(0, 2) == Section::basis(3, 1, 0));
    CHECK(check_lie_algebroid(heis).passed());

    for (const auto& name : fx::valid_names()) {
      const auto inst = fx::corpus(name);
      const auto& a = inst.algebroid;
      const Representation rep = lsakit::cli::complex_representation(inst);
      const LSAlgebroid f = semidirect_lsa(a, rep);
      CHECK(check_left_symmetric(f).passed());
      Representation diff = rep;
      for (std::size_t i = 0; i < a.rank(); ++i) diff.rho[i] -= rep.mu[i];
      const LieAlgebroid expected = semidirect_lie_unchecked(sub_adjacent(a), diff);
      CHECK(sub_adjacent(f).table() == expected.table());
      CHECK(sub_adjacent(f).anchors() == expected.anchors());
    }
    const LSAlgebroid lu = fx::point_algebra(kLeftUnit);
    const Representation lr = left_right(lu);
    Representation diff = lr;
    for (std::size_t i = 0; i < 2; ++i) diff.rho[i] -= lr.mu[i];
    CHECK(sub_adjacent(semidirect_lsa(lu, lr)).table() ==
          semidirect_lie_unchecked(sub_adjacent(lu), diff).table());

    const LSAlgebroid zero_rep = semidirect_lsa(point, Representation::zero(2, 1, 0));
    CHECK(zero_rep.product(0, 1) == Section::basis(3, 1, 0));
    CHECK(zero_rep.product(2, 0).is_zero());
    CHECK(zero_rep.product(0, 2).is_zero());
  }

  TEST_CASE("kernel representations") {
    const auto zero = fx::corpus("zero_r2").algebroid;
    CHECK(kernel_representations(zero, {zero.basis(0), zero.basis(1)}).passed());

    const auto q = fx::corpus("quadratic_r2");
    const Report kr = kernel_representations(q.algebroid, *q.kernel_frame);
    CHECK(kr.find("(K;ad,0)/rho-bracket") != nullptr);
    CHECK(kr.find("(K;L,R)/rho-mu-compatibility") != nullptr);
    CHECK(kr.passed());

    try {
      kernel_representations(q.algebroid, {q.algebroid.basis(0)});
      FAIL("expected FrameNotInKernel");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::FrameNotInKernel);
    }
  }
}
