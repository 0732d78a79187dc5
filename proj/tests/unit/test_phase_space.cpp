#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/constructions.hpp"
#include "lsakit/error.hpp"
#include "lsakit/phase_space.hpp"

using namespace lsakit;

TEST_SUITE("phase_space") {
  TEST_CASE("phase spaces of all valid instances") {
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      const PhaseSpace ps = build_phase_space(a);
      CHECK(ps.report.passed());
      CHECK(ps.P.rank() == 2 * a.rank());
      CHECK(lie_form_d(ps.P, ps.omega).is_zero());
      CHECK(check_lie_algebroid(ps.P).passed());
      CHECK(check_paracomplex(ps.P, canonical_paracomplex(a.rank(), a.nvars())));
    }
    CHECK_THROWS_AS(build_phase_space(fx::corpus("point_nonexample").algebroid), Error);
  }

  TEST_CASE("phase space of the point algebra") {
    const PhaseSpace ps = build_phase_space(fx::corpus("point_e1e2").algebroid);
    CHECK(ps.P.bracket(0, 3) == -Section::basis(4, 3, 0));
    CHECK(ps.P.bracket(0, 1) == Section::basis(4, 1, 0));
    CHECK(ps.omega.at({0, 2}) == Poly::constant(0, 1));
    CHECK(ps.omega.at({2, 0}) == Poly::constant(0, -1));
    CHECK(ps.omega.at({0, 3}).is_zero());
    CHECK(form_matrix(ps.omega).determinant() == Poly::constant(0, 1));

    const PhaseSpace z = build_phase_space(fx::point_algebra({{{0}}}));
    CHECK(z.P.bracket(0, 1).is_zero());
    CHECK(z.report.passed());
  }

  TEST_CASE("paracomplex structure on a two-dimensional Lie algebra") {
    const LieAlgebroid l = fx::point_lie({{{0, 0}, {0, 1}}, {{0, -1}, {0, 0}}});
    // P[e1,e2] = e1, and [Pe1,e2] + [e1,Pe2] - P[Pe1,Pe2] = 0 + 0 - P(-e2) = e1.
    CHECK(check_paracomplex(l, fx::constant_matrix({{0, 1}, {1, 0}})));
    CHECK(check_paracomplex(l, PolyMatrix::identity(2, 0)));
    CHECK_FALSE(check_paracomplex(l, fx::constant_matrix({{1, 0}, {0, 2}})));
  }

  TEST_CASE("left-symmetric structure recovered from a phase space") {
    for (const auto& name : fx::valid_names()) {
      const auto a = fx::corpus(name).algebroid;
      const PhaseLSA back = lsa_from_phase(sub_adjacent(a), build_left_mult_rep(a));
      CHECK(back.compatible);
      CHECK(back.lsa.table() == a.table());
      CHECK(back.report.passed());
      CHECK(check_left_symmetric(back.phase_product).passed());
    }
    const LieAlgebroid l = fx::point_lie({{{0, 0}, {0, 1}}, {{0, -1}, {0, 0}}});
    Representation rep = Representation::zero(2, 2, 0);
    rep.rho[0] = fx::constant_matrix({{0, 0}, {0, 1}});
    const PhaseLSA p = lsa_from_phase(l, rep);
    CHECK(p.lsa.product(0, 1) == Section::basis(2, 1, 0));
    CHECK(p.lsa.product(1, 0).is_zero());

    const LieAlgebroid ab = fx::point_lie({{{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    const PhaseLSA pz = lsa_from_phase(ab, Representation::zero(2, 2, 0));
    CHECK(pz.lsa.product(1, 1).is_zero());

    // rho = ad is a representation, but [x,y] = ad_x y - ad_y x = 2[x,y] fails.
    Representation ad = Representation::zero(2, 2, 0);
    ad.rho[0] = fx::constant_matrix({{0, 0}, {0, 1}});
    ad.rho[1] = fx::constant_matrix({{0, 0}, {-1, 0}});
    try {
      lsa_from_phase(l, ad);
      FAIL("expected a refusal");
    } catch (const Error& e) {
      CHECK((e.code() == Errc::OmegaNotClosed || e.code() == Errc::IncompatibleBracket));
    }
  }

  TEST_CASE("quadratic forms") {
    const auto flat = fx::corpus("flat_r2");
    const QuadraticReport qf = quadratic_report(flat.algebroid, *flat.bilinear_form);
    CHECK(qf.quadratic);
    REQUIRE(qf.positive_definite.has_value());
    CHECK(*qf.positive_definite);

    const auto zero = fx::corpus("zero_r2").algebroid;
    const PolyMatrix indefinite = fx::constant_matrix({{1, 0}, {0, -1}});
    const QuadraticReport qz = quadratic_report(zero, indefinite);
    CHECK(qz.quadratic);
    REQUIRE(qz.positive_definite.has_value());
    CHECK_FALSE(*qz.positive_definite);

    const auto point = fx::corpus("point_e1e2").algebroid;
    const QuadraticReport qp = quadratic_report(point, PolyMatrix::identity(2, 0));
    CHECK_FALSE(qp.quadratic);
    // (e1.e2, e2) + (e2, e1.e2) = 2 while a(e1) = 0.
    CHECK(fx::contains(qp.report.find("invariance")->witnesses, "(e1.e2,e2) + (e2,e1.e2): lhs = 2, rhs = 0"));

    const auto quad = fx::corpus("quadratic_r2");
    CHECK(check_quadratic(quad.algebroid, *quad.bilinear_form));
    CHECK(quadratic_kernel_descend(quad.algebroid, *quad.bilinear_form, *quad.kernel_frame));
    CHECK(quadratic_kernel_descend(zero, indefinite, {zero.basis(0), zero.basis(1)}));
    CHECK(quadratic_kernel_descend(flat.algebroid, *flat.bilinear_form, {}));

    CHECK(constant_positive_definite(fx::constant_matrix({{2, 1}, {1, 2}})) == std::optional<bool>(true));
    CHECK(constant_positive_definite(fx::constant_matrix({{1, 2}, {2, 1}})) == std::optional<bool>(false));
    CHECK_FALSE(constant_positive_definite(fx::matrix({{"x", "0"}, {"0", "1"}}, {"x"})).has_value());

    try {
      quadratic_report(zero, fx::constant_matrix({{1, 1}, {0, 1}}));
      FAIL("expected NotQuadratic");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotQuadratic);
    }
  }

  TEST_CASE("complex structures") {
    const ComplexStructure z1 = build_complex_structure(fx::point_algebra({{{0}}}), fx::constant_matrix({{1}}));
    CHECK(z1.J == fx::constant_matrix({{0, -1}, {1, 0}}));
    CHECK(z1.report.passed());
    CHECK(z1.report.find("kahler-positive")->status == Status::Pass);

    const auto flat = fx::corpus("flat_r2");
    const ComplexStructure cf = build_complex_structure(flat.algebroid, *flat.bilinear_form);
    for (const char* name : {"complex/square", "complex/integrability", "paracomplex/involution",
                             "complex-product", "kahler-compatible", "kahler-positive"}) {
      const CheckRecord* rec = cf.report.find(name);
      REQUIRE_MESSAGE(rec != nullptr, name);
      CHECK_MESSAGE(rec->status == Status::Pass, name);
    }

    const auto zero = fx::corpus("zero_r2").algebroid;
    const ComplexStructure ci = build_complex_structure(zero, fx::constant_matrix({{1, 0}, {0, -1}}));
    CHECK(ci.report.passed());
    CHECK(ci.report.find("complex-product")->status == Status::Pass);
    const CheckRecord* kp = ci.report.find("kahler-positive");
    CHECK((kp == nullptr || kp->status != Status::Pass));

    const auto quad = fx::corpus("quadratic_r2");
    CHECK(build_complex_structure(quad.algebroid, *quad.bilinear_form).report.passed());

    CHECK_THROWS_AS(build_complex_structure(fx::corpus("point_e1e2").algebroid, PolyMatrix::identity(2, 0)),
                    Error);
  }

  TEST_CASE("phase space isomorphisms") {
    const auto point = fx::corpus("point_e1e2").algebroid;
    const PhaseIsomorphism iso = phase_iso_from_lsa_iso(point, point, fx::constant_matrix({{1, 0}, {0, 2}}));
    CHECK(iso.Phi == fx::constant_matrix({{1, 0, 0, 0},
                                          {0, 2, 0, 0},
                                          {0, 0, 1, 0},
                                          {0, 0, 0, Rational(1, 2)}}));
    CHECK(iso.report.passed());
    CHECK(phase_iso_from_lsa_iso(point, point, PolyMatrix::identity(2, 0)).Phi == PolyMatrix::identity(4, 0));
    try {
      phase_iso_from_lsa_iso(point, point, fx::constant_matrix({{0, 1}, {1, 0}}));
      FAIL("expected NotIsomorphism");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotIsomorphism);
    }
  }
}
