#include "celint/errors.hpp"
#include "celint/rational_function.hpp"

#include <doctest.h>

#include <random>

using namespace celint;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }
Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

RationalFunction random_rf(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-4, 4), deg(0, 2);
  auto random_poly = [&] {
    std::vector<Rational> c;
    int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng));
    return poly(c);
  };
  Polynomial den;
  do den = random_poly();
  while (den.is_zero());
  return RationalFunction(random_poly(), den);
}

} // namespace

TEST_CASE("rational normalizes and compares") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational(-3, 2).to_string() == "-3/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(Rational(1, 0), ZeroDenominator);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("1/x"), ParseError);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("polynomial division and gcd") {
  Polynomial m = Polynomial::m();
  Polynomial a = (m + Polynomial(1)) * (m - Polynomial(2));
  auto [q, r] = a.divmod(m - Polynomial(2));
  CHECK(q == m + Polynomial(1));
  CHECK(r.is_zero());
  CHECK(gcd(a, (m + Polynomial(1)) * (m + Polynomial(3))) == m + Polynomial(1));
  CHECK(gcd(Polynomial(), Polynomial()).is_zero());
  CHECK_THROWS_AS(a.divmod(Polynomial()), DivisionByZero);
  CHECK(a.evaluate(Rational(2)).is_zero());
  CHECK(Polynomial::render_integer(std::vector<mpz_class>{5, 6}) == "5+6*m");
}

TEST_CASE("make_rational_function canonical forms") {
  Polynomial m = Polynomial::m();
  RationalFunction f(Polynomial(2) * m + Polynomial(2), m * m - Polynomial(1));
  CHECK(f == RationalFunction(Polynomial(2), m - Polynomial(1)));
  CHECK(f.to_string() == "2/(-1+m)");

  RationalFunction z(Polynomial(), m);
  CHECK(z.is_zero());
  CHECK(z.den() == Polynomial(1));

  RationalFunction sq(m * m + Polynomial(2) * m + Polynomial(1), m + Polynomial(1));
  CHECK(sq == RationalFunction(m + Polynomial(1)));

  CHECK_THROWS_AS(RationalFunction(m, Polynomial()), ZeroDenominator);

  // normalizing a canonical form is the identity
  RationalFunction again(f.num(), f.den());
  CHECK(again.num() == f.num());
  CHECK(again.den() == f.den());
}

TEST_CASE("field operations") {
  CHECK(rf("1/(1+m)") + rf("m/(1+m)") == RationalFunction(1));
  RationalFunction prod = rf("(3+m)/(1+m)") * rf("(2+m)/(1+m)");
  CHECK(prod == rf("(3+m)*(2+m)/(1+m)^2"));
  CHECK(prod.to_string() == "(6+5*m+m^2)/(1+2*m+m^2)");
  CHECK(RationalFunction(1) - rf("m/(1+m)") == rf("1/(1+m)"));
  CHECK_THROWS_AS(rf("m") / RationalFunction(), DivisionByZero);
  CHECK(-rf("m") + rf("m") == RationalFunction());
}

TEST_CASE("evaluate") {
  CHECK(rf("-12*m/(5+6*m)").evaluate(1) == Rational(-12, 11));
  CHECK_THROWS_AS(rf("2/(m-1)").evaluate(1), PoleError);
  CHECK(rf("(3+2*m)/(1+m)").evaluate(-2) == Rational(1));
  CHECK_THROWS_AS(evaluate_quotient(Polynomial::m(), Polynomial::m(), 0), IndeterminateError);
}

TEST_CASE("rational_poles") {
  auto r = rational_poles(rf("-12*m/(5+6*m)"));
  REQUIRE(r.poles.size() == 1);
  CHECK(r.poles[0] == Rational(-5, 6));
  CHECK(r.nonlinear_factors.empty());

  CHECK(rational_poles(RationalFunction(7)).poles.empty());

  auto two = rational_poles(rf("1/((1+m)^2*(5+6*m))"));
  REQUIRE(two.poles.size() == 2);
  CHECK(two.poles[0] == Rational(-1));
  CHECK(two.poles[1] == Rational(-5, 6));

  auto irr = rational_poles(rf("1/((m^2+1)*m)"));
  REQUIRE(irr.poles.size() == 1);
  CHECK(irr.poles[0] == Rational(0));
  REQUIRE(irr.nonlinear_factors.size() == 1);
  CHECK(irr.nonlinear_factors[0] == Polynomial::m() * Polynomial::m() + Polynomial(1));
}

TEST_CASE("render and parse round trip") {
  for (const char* s : {"0", "7", "-3/2", "m", "-12*m/(5+6*m)", "(3+2*m)/(1+m)", "1/m^2", "(1-m)/(2+m)"}) {
    RationalFunction f = rf(s);
    CHECK(rf(f.to_string().c_str()) == f);
  }
  CHECK(rf("-12*m/(5+6*m)").to_string() == "-12*m/(5+6*m)");
  CHECK(rf("3 - 12*m/(5+6*m)").to_string() == "(15+6*m)/(5+6*m)");
  CHECK_THROWS_AS(rf("3 +"), ParseError);
  CHECK_THROWS_AS(rf("mm"), ParseError);
}

TEST_CASE("field axioms on random inputs") {
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 200; ++trial) {
    RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == RationalFunction(1));
    Rational x(trial % 7 - 3, 5);
    try {
      Rational ax = a.evaluate(x), bx = b.evaluate(x);
      CHECK((a + b).evaluate(x) == ax + bx);
      CHECK((a * b).evaluate(x) == ax * bx);
    } catch (const PoleError&) {
    }
  }
}
