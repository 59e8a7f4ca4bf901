#include <random>

#include "doctest.h"
#include "frieze_lab/error.hpp"
#include "frieze_lab/exactalg/rational_function.hpp"

using namespace frieze_lab;

namespace {

RationalFunction rf(const char* s) { return RationalFunction::parse(s); }
Polynomial poly(const char* s) { return RationalFunction::parse(s).num(); }

Polynomial random_poly(std::mt19937& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> coeff(-4, 4), var(1, 4), deg(0, max_deg);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Factor> f;
    for (int k = deg(rng); k > 0; --k) f.emplace_back(var(rng), 1);
    ts.push_back({Monomial(f), coeff(rng)});
  }
  Polynomial p = Polynomial::from_terms(ts);
  return p.is_zero() ? Polynomial(1) : p;
}

RationalFunction random_rf(std::mt19937& rng) {
  return RationalFunction(random_poly(rng, 3, 2), random_poly(rng, 3, 2));
}

}  // namespace

TEST_CASE("monomial order is graded lex with u0 < u1 < ...") {
  auto m = [](std::initializer_list<Monomial::Factor> f) { return Monomial(f); };
  CHECK(grlex(m({{1, 1}}), m({{2, 1}})) < 0);
  CHECK(grlex(m({{3, 2}}), m({{1, 1}, {2, 1}})) > 0);
  CHECK(grlex(m({{1, 3}}), m({{2, 1}})) > 0);
  CHECK(grlex(m({{0, 1}, {2, 1}}), m({{1, 2}})) > 0);
  CHECK(grlex(m({{1, 1}, {2, 1}}), m({{2, 1}, {1, 1}})) == 0);
}

TEST_CASE("canonical text form") {
  RationalFunction a = rf("(u1*u2*u4*u5 + (1+u3)^2)/(u3*u4*u5)");
  CHECK(a.to_string() == "(u1*u2*u4*u5 + u3^2 + 2*u3 + 1)/(u3*u4*u5)");
  CHECK(rf("u1/u3").to_string() == "u1/u3");
  CHECK(rf("-u1 + 3").to_string() == "-u1 + 3");
  CHECK(rf("6/4").to_string() == "3/2");
  CHECK(rf("(u1^2 - 1)/(u1 - 1)").to_string() == "u1 + 1");
  CHECK(rf("(2*u1)/(4*u2)").to_string() == "u1/(2*u2)");
  CHECK(rf("u1/(-u2)").to_string() == "(-u1)/u2");
  CHECK(rf("0").to_string() == "0");
}

TEST_CASE("parse round-trips the canonical form") {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    RationalFunction f = random_rf(rng);
    CHECK(RationalFunction::parse(f.to_string()) == f);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(rf("u1 +"), Error);
  CHECK_THROWS_AS(rf("(u1"), Error);
  CHECK_THROWS_AS(rf("u1/0"), Error);
  CHECK_THROWS_AS(rf("x1"), Error);
  CHECK_THROWS_AS(RationalFunction(1, 0), Error);
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 40; ++i) {
    RationalFunction a = random_rf(rng), b = random_rf(rng), c = random_rf(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == RationalFunction(0));
    if (!a.is_zero()) CHECK(a / a == RationalFunction(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("canonical form is unique and coprime") {
  std::mt19937 rng(99);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly(rng, 3, 2), q = random_poly(rng, 3, 2), r = random_poly(rng, 3, 2);
    RationalFunction f(p * r, q * r);
    CHECK(f == RationalFunction(p, q));
    CHECK(gcd(f.num(), f.den()).is_one());
    CHECK(f.den().leading().coeff > 0);
  }
}

TEST_CASE("gcd of products recovers the common factor") {
  std::mt19937 rng(5);
  for (int i = 0; i < 40; ++i) {
    Polynomial a = random_poly(rng, 3, 2), b = random_poly(rng, 3, 2), g = random_poly(rng, 3, 3);
    Polynomial h = gcd(a * g, b * g);
    CHECK(divide_exact(h, gcd(g, g)).has_value());
    CHECK(divide_exact(a * g, h).has_value());
    CHECK(divide_exact(b * g, h).has_value());
  }
  CHECK(gcd(poly("u1^2 - u2^2"), poly("u1^2 + 2*u1*u2 + u2^2")) == poly("u1 + u2"));
  CHECK(gcd(poly("6*u1*u2"), poly("4*u1^2")) == poly("2*u1"));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(poly("u1^2 - 1"), poly("u1 + 1")) == poly("u1 - 1"));
  CHECK_FALSE(divide_exact(poly("u1^2 + 1"), poly("u1 + 1")).has_value());
  CHECK_THROWS_AS(divide_exact(poly("u1"), Polynomial()), Error);
}

TEST_CASE("poly_sqrt") {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    Polynomial p = random_poly(rng, 4, 3);
    Polynomial s = poly_sqrt(p * p);
    CHECK((s == p || s == -p));
    CHECK(s.leading().coeff > 0);
  }
  CHECK(poly_sqrt(poly("u1^2*u2^2*u4^2")) == poly("u1*u2*u4"));
  CHECK_THROWS_AS(poly_sqrt(poly("u1^2 + 1")), Error);
  CHECK_THROWS_AS(poly_sqrt(poly("2*u1^2")), Error);
  CHECK_THROWS_AS(poly_sqrt(poly("-u1^2")), Error);
  CHECK_THROWS_AS(poly_sqrt(poly("u1*u2")), Error);
}

TEST_CASE("laurent decomposition") {
  auto l = rf("(u1*u2 + 1)/(u1*u3^2)").laurent();
  REQUIRE(l.has_value());
  CHECK(l->denominator == Monomial({{1, 1}, {3, 2}}));
  CHECK_FALSE(rf("1/(u1 + u2)").laurent().has_value());
  CHECK_FALSE(rf("1/(2*u1)").laurent().has_value());
}

TEST_CASE("evaluate and substitute") {
  RationalFunction f = rf("(u1*u2 + (1+u3)^2)/(u3*u4)");
  Valuation ones = [](Var) { return mpq_class(1); };
  CHECK(f.evaluate(ones) == 5);
  Valuation v = [](Var x) { return mpq_class(x + 1, 2); };
  CHECK(f.evaluate(v) == mpq_class(21, 10));
  CHECK_THROWS_AS(rf("1/(u1 - 1)").evaluate(ones), Error);

  RationalFunction g = f.substitute({{1, rf("(1+u3)/u1")}});
  CHECK(g == rf("(((1+u3)/u1)*u2 + (1+u3)^2)/(u3*u4)"));
  CHECK(rf("u0*u1 + u0^2").substitute({{0, RationalFunction(1)}}) == rf("u1 + 1"));
}

TEST_CASE("hash agrees with equality") {
  CHECK(rf("(u1+1)^2/u2").hash() == rf("(u1^2 + 2*u1 + 1)/u2").hash());
}
