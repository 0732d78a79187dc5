#include "doctest.h"
#include "fixtures.hpp"
#include "lsakit/error.hpp"
#include "lsakit/poly.hpp"

using namespace lsakit;

namespace {
const std::vector<std::string> xy{"x", "y"};
}

TEST_SUITE("poly") {
  TEST_CASE("terms are kept in graded lexicographic order") {
    const Poly p = fx::poly("1 + y + x + y^2 + x*y + x^2", xy);
    REQUIRE(p.size() == 6);
    std::vector<Exponents> order;
    for (const auto& t : p.terms()) order.push_back(t.exponents);
    CHECK(order == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}, {1, 0}, {0, 1}, {0, 0}});
    CHECK(p.to_string(xy) == "x^2 + x*y + y^2 + x + y + 1");
  }

  TEST_CASE("ring identities") {
    const Poly x = Poly::variable(2, 0);
    const Poly y = Poly::variable(2, 1);
    CHECK((x + y).pow(2) == x * x + Rational(2) * x * y + y * y);
    CHECK((x - y) * (x + y) == x.pow(2) - y.pow(2));
    CHECK((x - x).is_zero());
    CHECK(Poly::constant(0, 3) * x == Rational(3) * x);
    CHECK(fx::poly("(x+1)^3", xy) == fx::poly("x^3 + 3*x^2 + 3*x + 1", xy));
  }

  TEST_CASE("random ring axioms and derivative Leibniz rule") {
    RandomSource rng(7);
    for (int i = 0; i < 200; ++i) {
      const Poly p = rng.poly(2, 3);
      const Poly q = rng.poly(2, 3);
      const Poly r = rng.poly(2, 3);
      CHECK(p * q == q * p);
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p + q) - q == p);
      CHECK((p * q).derivative(0) == p.derivative(0) * q + p * q.derivative(0));
    }
  }

  TEST_CASE("printing round-trips through the parser") {
    RandomSource rng(11);
    for (int i = 0; i < 300; ++i) {
      const Poly p = rng.poly(2, 4, 5);
      CHECK(fx::poly(p.to_string(xy), xy) == p);
    }
    CHECK(fx::poly("-x + 3/2*y^2", xy).to_string(xy) == "3/2*y^2 - x");
    CHECK(fx::poly("-3/2", xy).to_string(xy) == "-3/2");
  }

  TEST_CASE("derivative, specialization, extension") {
    const Poly p = fx::poly("x^3*y - 2*x + 5", xy);
    CHECK(p.derivative(0) == fx::poly("3*x^2*y - 2", xy));
    CHECK(p.derivative(1) == fx::poly("x^3", xy));
    const Poly at = p.specialize(0, Rational(2));
    CHECK(at.nvars() == 1);
    CHECK(at == fx::poly("8*y + 1", {"y"}));
    CHECK(p.extended(3).specialize(2, Rational(9)) == p);
    CHECK_THROWS_AS(p.derivative(2), Error);
  }

  TEST_CASE("syntax errors carry the byte offset") {
    auto position_of = [](const std::string& text) -> long {
      try {
        parse_poly(text, xy);
      } catch (const SyntaxError& e) {
        return static_cast<long>(e.position());
      }
      return -1;
    };
    CHECK(position_of("x**2") == 2);
    CHECK(position_of("2x") == 1);
    CHECK(position_of("x^") == 2);
    CHECK(position_of("(x + y") == 6);
    CHECK(position_of("1/0") == 2);
    CHECK(position_of("") == 0);
    CHECK(position_of("x + ") == 4);
    try {
      parse_poly("x + z", xy);
      FAIL("expected UnknownVariable");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::UnknownVariable);
    }
  }

  TEST_CASE("degree guard") {
    const Poly x = Poly::variable(1, 0);
    CHECK_NOTHROW(x.pow(16));
    try {
      (void)x.pow(17);
      FAIL("expected DegreeOverflow");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DegreeOverflow);
    }
    set_max_total_degree(20);
    CHECK_NOTHROW(x.pow(17));
    set_max_total_degree(16);
  }
}
