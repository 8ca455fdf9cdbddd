#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wittzeta/errors.hpp"
#include "wittzeta/int_poly.hpp"
#include "wittzeta/integer.hpp"

using namespace wittzeta;

TEST_CASE("normalization and degree") {
  CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial().degree() == -1);
  CHECK(IntPolynomial{3, 0, 1}.coeff(7) == 0);
}

TEST_CASE("arithmetic") {
  const IntPolynomial f{1, 1};
  const IntPolynomial g{1, -1};
  CHECK(f * g == IntPolynomial{1, 0, -1});
  CHECK(f + g == IntPolynomial{2});
  CHECK(f - f == IntPolynomial());
  CHECK(-f == IntPolynomial{-1, -1});
  CHECK(f * Integer(3) == IntPolynomial{3, 3});
  CHECK(IntPolynomial::monomial(Integer(5), 3) == IntPolynomial{0, 0, 0, 5});
}

TEST_CASE("evaluate and substitute_power") {
  const IntPolynomial f{1, -2, 3};
  CHECK(f.evaluate(Integer(2)) == 9);
  CHECK(f.substitute_power(2) == IntPolynomial{1, 0, -2, 0, 3});
  CHECK(f.substitute_power(2).evaluate(Integer(3)) == f.evaluate(Integer(9)));
}

TEST_CASE("exact coefficient division") {
  CHECK(divide_exact(IntPolynomial{4, -6}, 2) == IntPolynomial{2, -3});
  CHECK_FALSE(divide_exact(IntPolynomial{4, 5}, 2).has_value());
}

TEST_CASE("to_string") {
  CHECK(IntPolynomial().to_string() == "0");
  CHECK(IntPolynomial{1}.to_string() == "1");
  CHECK(IntPolynomial{1, -3, 2}.to_string("t").find('t') != std::string::npos);
}

TEST_CASE("integer helpers") {
  CHECK(ipow(Integer(3), 4) == 81);
  CHECK(ipow(Integer(7), 0) == 1);
  CHECK(multichoose(Integer(3), 3) == 10);
  CHECK(multichoose(Integer(0), 0) == 1);
  CHECK(multichoose(Integer(0), 2) == 0);
  // (1 - t)^{2}: coefficients 1, -2, 1, 0
  CHECK(multichoose(Integer(-2), 1) == -2);
  CHECK(multichoose(Integer(-2), 2) == 1);
  CHECK(multichoose(Integer(-2), 3) == 0);
  CHECK(parse_integer("-123456789012345678901234567890") == Integer("-123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_integer("12a"), InputError);
  CHECK_THROWS_AS(parse_integer(""), InputError);
  CHECK(is_prime(Integer(31)));
  CHECK_FALSE(is_prime(Integer(1)));
  CHECK(prime_power(Integer(32)) == std::make_pair(Integer(2), std::uint64_t{5}));
  CHECK_FALSE(prime_power(Integer(12)).has_value());
  CHECK_FALSE(prime_power(Integer(1)).has_value());
  const int mu[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  for (std::uint64_t n = 1; n <= 12; ++n) CHECK(mobius(n) == mu[n - 1]);
}
