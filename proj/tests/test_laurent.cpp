#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "specfock/laurent.hpp"

using namespace specfock;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp(-6, 6), coeff(-9, 9), count(0, 5);
  LaurentPoly p;
  for (int k = count(rng); k > 0; --k) p += LaurentPoly::monomial(exp(rng), coeff(rng));
  return p;
}

// Valuation by the textbook route: count how often Phi_l divides the expanded polynomial.
int valuation_by_division(LaurentPoly p, int l) {
  int v = 0;
  while (auto d = p.exact_divide(cyclotomic(l))) {
    p = *d;
    ++v;
  }
  return v;
}

}  // namespace

TEST_CASE("gauss integers") {
  CHECK(gauss(0).is_zero());
  CHECK(gauss(1) == LaurentPoly(1));
  CHECK(gauss(3) == P("1 + q + q^2"));
  CHECK_THROWS(gauss(-1));
  CHECK(gauss_factorial(3) == gauss(2) * gauss(3));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P("-1 + q"));
  CHECK(cyclotomic(2) == P("1 + q"));
  CHECK(cyclotomic(6) == P("1 - q + q^2"));
  CHECK(cyclotomic(12) == P("1 - q^2 + q^4"));
  for (int l = 1; l <= 30; ++l) {
    LaurentPoly prod(1);
    for (int d = 1; d <= l; ++d)
      if (l % d == 0) prod *= cyclotomic(d);
    CHECK(prod == LaurentPoly::monomial(l) - LaurentPoly(1));
  }
}

TEST_CASE("cyclotomic valuation") {
  CHECK(cyclo_valuation(gauss(5), 5) == 1);
  CHECK(cyclo_valuation(gauss(6), 3) == 1);
  CHECK(cyclo_valuation(GaussRatio({4}, {2}), 2) == 0);
  CHECK(cyclo_valuation(gauss(4) * gauss(8), 2) == 2);
  CHECK_THROWS(cyclo_valuation(LaurentPoly(), 3));
  for (int n = 1; n <= 60; ++n)
    for (int l = 2; l <= 12; ++l) CHECK(cyclo_valuation(gauss(n), l) == (n % l == 0 ? 1 : 0));
}

TEST_CASE("gauss ratio valuation agrees with polynomial division") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(1, 40), len(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> num, den;
    for (int k = len(rng); k > 0; --k) num.push_back(entry(rng));
    for (int k = len(rng); k > 0; --k) den.push_back(entry(rng));
    GaussRatio r(num, den);
    auto [pn, pd] = r.expand();
    for (int l = 2; l <= 12; ++l)
      CHECK(cyclo_valuation(r, l) == valuation_by_division(pn, l) - valuation_by_division(pd, l));
  }
}

TEST_CASE("gauss ratio arithmetic") {
  GaussRatio a({8, 7, 5, 3}, {7, 6, 4, 2});
  CHECK(a.value_at_one() == Rational(5, 2));
  CHECK(a.numerator() == std::vector<int>{3, 5, 8});
  CHECK((a / a) == GaussRatio::one());
  GaussRatio b({3}, {}, -1, 2);
  CHECK((a * b).value_at_one() == Rational(-15, 2));
  CHECK(b.evaluate(2) == Rational(-28));
  CHECK_THROWS(GaussRatio({0}, {}));
  CHECK(GaussRatio({1, 1}, {}).numerator().size() == 2);
}

TEST_CASE("bar involution and symmetric split") {
  CHECK(bar(P("q^2")) == P("q^-2"));
  CHECK(bar(P("1 + q")) == P("1 + q^-1"));
  auto s1 = bar_symmetric_split(P("q + q^-1"));
  CHECK(s1.gamma == P("q^-1 + q"));
  CHECK(s1.rest.is_zero());
  auto s2 = bar_symmetric_split(P("1 + q^2"));
  CHECK(s2.gamma == LaurentPoly(1));
  CHECK(s2.rest == P("q^2"));
  auto s3 = bar_symmetric_split(P("q^-2 + 3"));
  CHECK(s3.gamma == P("q^-2 + 3 + q^2"));
  CHECK(s3.rest == P("-q^2"));

  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = random_poly(rng);
    CHECK(bar(bar(p)) == p);
    auto s = bar_symmetric_split(p);
    CHECK(bar(s.gamma) == s.gamma);
    CHECK(s.rest.in_positive_part());
    CHECK(s.gamma + s.rest == p);
  }
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      auto d = (a * b).exact_divide(b);
      REQUIRE(d.has_value());
      CHECK(*d == a);
    }
  }
}

TEST_CASE("evaluation") {
  CHECK(evaluate(P("1 + q"), 1) == 2);
  CHECK(evaluate(P("q^-1"), 2) == Rational(1, 2));
  CHECK(evaluate(gauss(3), 2) == 7);
  CHECK_THROWS(evaluate(P("q^-1"), 0));
  CHECK(q_integer(3, 1) == 3);
  CHECK(q_integer(-2, 1) == -2);
  CHECK(q_integer(-2, 2) == Rational(-3, 4));
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("text round trip") {
  CHECK(P("-q^-2 + 3 + 2*q^3").to_string() == "-q^-2 + 3 + 2*q^3");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("q - q^2").to_string() == "q - q^2");
  CHECK(P("  2*q^-1-q ").to_string() == "2*q^-1 - q");
  CHECK_THROWS(P("q^"));
  CHECK_THROWS(P("3x"));
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = random_poly(rng);
    CHECK(P(p.to_string().c_str()) == p);
  }
}

TEST_CASE("padic valuation") {
  CHECK(padic_valuation(18, 3) == 2);
  CHECK(padic_valuation(7, 3) == 0);
  CHECK_THROWS(padic_valuation(0, 3));
}

TEST_CASE("balanced quantum integers") {
  CHECK(balanced_gauss(2) == P("q^-1 + q"));
  CHECK(balanced_gauss(3) == P("q^-2 + 1 + q^2"));
  CHECK(bar(balanced_factorial(4)) == balanced_factorial(4));
  for (int n = 1; n <= 8; ++n) {
    LaurentPoly in_q2;
    LaurentPoly g = gauss(n);
    for (const auto& [e, c] : g.terms()) in_q2 += LaurentPoly::monomial(2 * e, c);
    CHECK(balanced_gauss(n).shifted(n - 1) == in_q2);
  }
}
