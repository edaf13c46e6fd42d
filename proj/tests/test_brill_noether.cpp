#include <vector>

#include "doctest.h"
#include "tricover/brill_noether.hpp"
#include "tricover/errors.hpp"

using namespace tricover;

namespace {

// Catalan numbers from the convolution recurrence.
std::vector<BigInt> catalan(int n) {
  std::vector<BigInt> c(n + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 0; i < m; ++i) {
      c[m] += c[i] * c[m - 1 - i];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("rho examples") {
  CHECK(rho(2, 1, 2) == 0);
  CHECK(rho(3, 1, 3) == 1);
  CHECK(rho(4, 1, 3) == 0);
  CHECK(rho(10, 2, 8) == 10 - 3 * 4);
  CHECK_THROWS_AS(rho(-1, 1, 2), ContractError);
  CHECK_THROWS_AS(rho(3, 0, 2), ContractError);
  CHECK_THROWS_AS(rho(3, 1, -1), ContractError);
}

TEST_CASE("rho is linear in d with slope r+1") {
  for (long g = 0; g <= 20; ++g) {
    for (long r = 1; r <= 4; ++r) {
      for (long d = 0; d <= 30; ++d) {
        REQUIRE(rho(g, r, d + 1) - rho(g, r, d) == r + 1);
      }
      REQUIRE(rho(g, 1, 5) == 2 * 5 - 2 - g);
    }
  }
}

TEST_CASE("castelnuovo_count examples") {
  CHECK(castelnuovo_count(2, 1, 2) == 1);
  CHECK(castelnuovo_count(4, 1, 3) == 2);
  CHECK(castelnuovo_count(6, 1, 4) == 5);
  CHECK_THROWS_AS(castelnuovo_count(3, 1, 3), ContractError);
}

TEST_CASE("castelnuovo_count for pencils is a Catalan number") {
  const auto cat = catalan(30);
  for (long d = 1; d <= 31; ++d) {
    REQUIRE(castelnuovo_count(2 * d - 2, 1, d) == cat[d - 1]);
  }
}

TEST_CASE("castelnuovo_count for nets matches the product formula") {
  // rho(g, 2, d) = 0 at g = 3k, d = 2k + 2.
  for (long k = 1; k <= 8; ++k) {
    const long g = 3 * k;
    const long d = 2 * k + 2;
    REQUIRE(rho(g, 2, d) == 0);
    const BigInt expected = factorial(g) * factorial(1) * factorial(2) /
                            (factorial(g - d + 2) * factorial(g - d + 3) * factorial(g - d + 4));
    REQUIRE(castelnuovo_count(g, 2, d) == expected);
  }
}

TEST_CASE("make_query") {
  const BNQuery q = make_query(4, 1, 3);
  CHECK(q.rho == 0);
  REQUIRE(q.count.has_value());
  CHECK(*q.count == 2);
  const BNQuery p = make_query(3, 1, 3);
  CHECK(p.rho == 1);
  CHECK_FALSE(p.count.has_value());
}

TEST_CASE("bn1_class examples") {
  CohomClass expected(4, 3);
  expected.add_term({0, 2}, Rat(BigInt(1), BigInt(2)));
  expected.add_term({1, 1}, Rat(-1));
  CHECK(bn1_class(4, 3) == expected);

  CHECK(bn1_class(3, 3) == CohomClass::theta_power(3, 3, 1) - CohomClass::x_power(3, 3, 1));

  // The d = g + 1 edge: theta^0/0! - x theta^{-1}/(-1)! = 1.
  CHECK(bn1_class(1, 2) == CohomClass::unit(1, 2));

  CHECK_THROWS_AS(bn1_class(4, 0), ContractError);
}

TEST_CASE("bn1_class at (28, 24) matches the factorial-scaled form") {
  const long e = 1;
  const Rat a = Rat(factorial(3 * e + 1));
  const Rat b = Rat(factorial(3 * e + 2));
  CohomClass scaled = CohomClass::theta_power(28, 24, 3 * e + 2) * a -
                      CohomClass::monomial(28, 24, {1, 3 * e + 1}) * b;
  scaled *= Rat(1) / (a * b);
  CHECK(bn1_class(28, 24) == scaled);
}

TEST_CASE("count and class duality") {
  long checked = 0;
  for (long d = 2; d <= 8; ++d) {
    for (long g = 0; g <= 2 * d; ++g) {
      if (rho(g, 1, d) != 0) {
        continue;
      }
      const Rat v = evaluate_top(bn1_class(g, d) * CohomClass::x_power(g, d, 1));
      REQUIRE(v == Rat(castelnuovo_count(g, 1, d)));
      ++checked;
    }
  }
  CHECK(checked == 7);
  CHECK(evaluate_top(bn1_class(4, 3) * CohomClass::x_power(4, 3, 1)) == Rat(2));
  CHECK(evaluate_top(bn1_class(6, 4) * CohomClass::x_power(6, 4, 1)) == Rat(5));
}

TEST_CASE("cs_max_degree") {
  CHECK(cs_max_degree(28, 2) == 11);
  CHECK(cs_max_degree(15, 1) == 6);
  for (long h = 1; h <= 12; ++h) {
    CHECK(cs_max_degree(3 * h, h) == 0);
    CHECK_THROWS_AS(cs_max_degree(3 * h - 1, h), DomainError);
    for (long g = 3 * h; g <= 3 * h + 60; ++g) {
      REQUIRE(cs_max_degree(g + 2, h) == cs_max_degree(g, h) + 1);
      REQUIRE(2 * cs_max_degree(g, h) <= g - 3 * h);
      REQUIRE(2 * cs_max_degree(g, h) + 2 > g - 3 * h);
    }
  }
}

TEST_CASE("lemma11_hypothesis") {
  CHECK(lemma11_hypothesis(28, 5));
  CHECK_FALSE(lemma11_hypothesis(27, 5));
  CHECK(lemma11_hypothesis(3, 2));
  CHECK_FALSE(lemma11_hypothesis(2, 2));
  CHECK(lemma11_hypothesis(1, 1));
  CHECK_FALSE(lemma11_hypothesis(0, 1));
  CHECK(lemma11_hypothesis(6, 3));
  CHECK_FALSE(lemma11_hypothesis(5, 3));
}
