#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittzeta/int_poly.hpp"
#include "wittzeta/series.hpp"

using namespace wittzeta;
using S = TruncatedSeries<Integer>;

namespace {

S series(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return S(std::move(v));
}

S random_unit_series(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<Integer> v{Integer(1)};
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return S(std::move(v));
}

// Schoolbook product computed with plain longs, independent of series_mul.
std::vector<long> convolve(const std::vector<long>& a, const std::vector<long>& b, std::size_t n) {
  std::vector<long> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

TEST_CASE("series_mul examples") {
  CHECK(series_equal(series_mul(series({1, 1, 0}), series({1, 1, 0})), series({1, 2, 1})));
  const S p = series({1, -4, 7, 2});
  CHECK(series_equal(series_mul(p, S::constant(Integer(1), 3)), p));
  const S geometric = series({1, 2, 4, 8, 16});
  CHECK(series_equal(series_mul(series({1, -2, 0, 0, 0}), geometric), series({1, 0, 0, 0, 0})));
}

TEST_CASE("series_mul matches a schoolbook convolution") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-10, 10);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<long> a(9), b(9);
    for (auto& x : a) x = d(rng);
    for (auto& x : b) x = d(rng);
    std::vector<Integer> ai(a.begin(), a.end()), bi(b.begin(), b.end());
    const S prod = series_mul(S(ai), S(bi));
    const auto expected = convolve(a, b, 8);
    for (std::size_t k = 0; k <= 8; ++k) CHECK(prod[k] == expected[k]);
  }
}

TEST_CASE("mixed precision truncates to the minimum") {
  const S p = series({1, 1, 1, 1});
  const S q = series({1, 1});
  CHECK(series_mul(p, q).precision() == 1);
  CHECK(series_add(p, q).precision() == 1);
}

TEST_CASE("series_inverse") {
  CHECK(series_equal(series_inverse(series({1, -2, 0, 0})), series({1, 2, 4, 8})));
  CHECK(series_equal(series_inverse(series({1})), series({1})));
  CHECK_THROWS_AS(series_inverse(series({2, 1})), InputError);
}

TEST_CASE("unit series group axioms on random instances") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const S p = random_unit_series(rng, 8, -10, 10);
    const S q = random_unit_series(rng, 8, -10, 10);
    const S r = random_unit_series(rng, 8, -10, 10);
    CHECK(series_equal(series_mul(series_mul(p, q), r), series_mul(p, series_mul(q, r))));
    CHECK(series_equal(series_mul(p, q), series_mul(q, p)));
    CHECK(series_equal(series_mul(p, series_inverse(p)), S::constant(Integer(1), 8)));
    CHECK(series_equal(series_inverse(series_inverse(p)), p));
  }
}

TEST_CASE("series_pow") {
  CHECK(series_equal(series_pow(series({1, 1, 0, 0}), 3), series({1, 3, 3, 1})));
  CHECK(series_equal(series_pow(series({1, -1, 0, 0}), -2), series({1, 2, 3, 4})));
  CHECK(series_equal(series_pow(series({1, 5, 6}), 0), series({1, 0, 0})));
}

TEST_CASE("series_nth_root examples") {
  CHECK(series_equal(series_nth_root(series({1, 2, 1}), 2), series({1, 1, 0})));
  const S p = series({1, 3, -2, 9});
  CHECK(series_equal(series_nth_root(p, 1), p));
  CHECK_THROWS_AS(series_nth_root(p, 0), InputError);
  // 1 + t has no integral square root: (1 + t)^{1/2} = 1 + t/2 - ...
  try {
    series_nth_root(series({1, 1, 0}), 2);
    FAIL("expected IntegralityError");
  } catch (const IntegralityError& e) {
    CHECK(e.degree() == 1);
  }
}

TEST_CASE("nth root inverts nth power over Z and Z[z]") {
  std::mt19937_64 rng(8);
  for (std::int64_t n : {2, 3, 5}) {
    for (int i = 0; i < 50; ++i) {
      const S q = random_unit_series(rng, 8, -4, 4);
      CHECK(series_equal(series_nth_root(series_pow(q, n), n), q));
    }
    std::uniform_int_distribution<long> d(-2, 2);
    for (int i = 0; i < 20; ++i) {
      std::vector<IntPolynomial> c{IntPolynomial::constant(1)};
      for (int k = 0; k < 8; ++k) c.push_back(IntPolynomial{d(rng), d(rng), d(rng)});
      const TruncatedSeries<IntPolynomial> q(c);
      CHECK(series_equal(series_nth_root(series_pow(q, n), n), q));
    }
  }
}

TEST_CASE("exact division undoes multiplication") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 200; ++i) {
    const Integer x(d(rng));
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 20);
    CHECK(ring::divide_exact(ring::mul_int(x, n), n) == x);
    const IntPolynomial f{d(rng), d(rng), d(rng)};
    CHECK(ring::divide_exact(ring::mul_int(f, n), n) == f);
  }
  CHECK_FALSE(ring::divide_exact(Integer(7), 2).has_value());
  CHECK_FALSE(ring::divide_exact(IntPolynomial{2, 3}, 2).has_value());
}

TEST_CASE("t_derivative and negate_variable") {
  CHECK(series_equal(t_derivative(series({1, 2, 3})), series({0, 2, 6})));
  CHECK(series_equal(negate_variable(series({1, 2, 3, 4})), series({1, -2, 3, -4})));
}
