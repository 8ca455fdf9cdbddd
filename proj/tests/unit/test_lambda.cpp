#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittzeta/lambda.hpp"

using namespace wittzeta;
using W = WittVector<Integer>;
using WP = WittVector<IntPolynomial>;
using WW = WittVector<W>;

namespace {

W witt(std::initializer_list<long> tail) {
  std::vector<Integer> t;
  for (long x : tail) t.emplace_back(x);
  return W::from_tail(Integer(1), t);
}

W teich(long a, std::size_t n) { return teichmuller(Integer(a), n); }

// Binomial coefficient by Pascal's triangle.
Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  std::vector<Integer> row{Integer(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Integer> next(i + 1, Integer(1));
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = next;
  }
  return row[k];
}

W random_teich_sum(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> d(-3, 3);
  W out = W::zero(Integer(1), n);
  for (int i = 0; i < 2; ++i) {
    const W t = teich(d(rng), n);
    out = rng() % 2 ? out + t : out - t;
  }
  return out;
}

}  // namespace

TEST_CASE("sigma_int examples") {
  CHECK(sigma_int(Integer(1), 4) == teich(1, 4));
  CHECK(sigma_int(Integer(0), 4) == W::zero(Integer(1), 4));
  CHECK(sigma_int(Integer(3), 3) == witt({3, 6, 10}));
  CHECK(sigma_int(Integer(3), 3) == teich(1, 3) + teich(1, 3) + teich(1, 3));
}

TEST_CASE("sigma_int coefficients are C(a+n-1, n)") {
  for (long a = 0; a <= 8; ++a) {
    const W s = sigma_int(Integer(a), 8);
    for (std::size_t n = 1; n <= 8; ++n) CHECK(s.coeff(n) == binomial(a + static_cast<long>(n) - 1, static_cast<long>(n)));
  }
}

TEST_CASE("sigma_int is a ring map") {
  for (long a = -6; a <= 6; ++a) {
    for (long b = -6; b <= 6; ++b) {
      CHECK(sigma_int(Integer(a + b), 8) == sigma_int(Integer(a), 8) + sigma_int(Integer(b), 8));
      CHECK(sigma_int(Integer(a * b), 8) == sigma_int(Integer(a), 8) * sigma_int(Integer(b), 8));
    }
  }
}

TEST_CASE("sigma_poly examples") {
  const IntPolynomial z{0, 1};
  CHECK(sigma_poly(z, 2) == WP::from_tail(IntPolynomial(), {z, z * z}));
  CHECK(sigma_poly(IntPolynomial(), 3) == WP::zero(IntPolynomial(), 3));
  for (long a = -3; a <= 3; ++a) {
    const WP s = sigma_poly(IntPolynomial::constant(Integer(a)), 5);
    const W t = sigma_int(Integer(a), 5);
    for (std::size_t n = 1; n <= 5; ++n) CHECK(s.coeff(n) == IntPolynomial::constant(t.coeff(n)));
  }
}

TEST_CASE("sigma_poly is a ring map") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int i = 0; i < 60; ++i) {
    const IntPolynomial f{d(rng), d(rng), d(rng), d(rng)};
    const IntPolynomial g{d(rng), d(rng), d(rng), d(rng)};
    CHECK(sigma_poly(f + g, 6) == sigma_poly(f, 6) + sigma_poly(g, 6));
    CHECK(sigma_poly(f * g, 6) == sigma_poly(f, 6) * sigma_poly(g, 6));
  }
}

TEST_CASE("lambda_from_sigma") {
  const auto l = lambda_from_sigma(sigma_int(Integer(2), 4));
  CHECK(series_equal(l, TruncatedSeries<Integer>({Integer(1), Integer(2), Integer(1), Integer(0), Integer(0)})));
  const auto one = lambda_from_sigma(W::zero(Integer(1), 3));
  CHECK(series_equal(one, TruncatedSeries<Integer>::constant(Integer(1), 3)));
  const IntPolynomial z{0, 1};
  const auto lz = lambda_from_sigma(sigma_poly(z, 3));
  CHECK(series_equal(lz, TruncatedSeries<IntPolynomial>({IntPolynomial{1}, z, IntPolynomial(), IntPolynomial()})));
}

TEST_CASE("lambda-sigma duality") {
  for (long a = -5; a <= 5; ++a) {
    const W s = sigma_int(Integer(a), 7);
    const auto l = lambda_from_sigma(s);
    CHECK(series_equal(series_mul(negate_variable(l), s.series()), TruncatedSeries<Integer>::constant(Integer(1), 7)));
  }
}

TEST_CASE("sigma_witt examples") {
  // ([1] - [a] u)^{-1}: coefficient of u^n is [a^n].
  for (long a : {2L, -3L, 5L}) {
    const WW s = sigma_witt(teich(a, 6), 2);
    CHECK(s.precision() == 2);
    CHECK(s.coeff(1) == teich(a, 3));
    CHECK(s.coeff(2) == teich(a * a, 3));
    CHECK(ghost(s).coord(1) == teich(a, 3));
    CHECK(ghost(s).coord(2) == teich(a * a, 3));
  }
  CHECK(sigma_witt(W::zero(Integer(1), 4), 2) == WW::zero(W::zero(Integer(1), 2), 2));
  const WW s = sigma_witt(teich(1, 6) + teich(2, 6), 2);
  CHECK(s.coeff(1) == teich(1, 3) + teich(2, 3));
  CHECK(s.coeff(2) == teich(1, 3) + teich(2, 3) + teich(4, 3));
  CHECK_THROWS_AS(sigma_witt(teich(1, 2), 3), PrecisionError);
}

TEST_CASE("sigma_witt ghost rule and ring map property") {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 40; ++i) {
    const std::size_t M = 1 + rng() % 4;
    const W p = random_teich_sum(rng, 12);
    const W q = random_teich_sum(rng, 12);
    const WW sp = sigma_witt(p, M);
    const auto g = ghost(sp);
    for (std::size_t n = 1; n <= M; ++n) CHECK(g.coord(n) == frobenius(p, n).truncate(12 / M));
    CHECK(sigma_witt(p + q, M) == sp + sigma_witt(q, M));
    CHECK(sigma_witt(p * q, M) == sp * sigma_witt(q, M));
  }
}

TEST_CASE("macdonald_poincare examples") {
  const IntPolynomial z2{0, 0, 1};
  const WP expected = teichmuller(IntPolynomial{1}, 2) + teichmuller(z2, 2);
  CHECK(macdonald_poincare(BettiVector{{Integer(1), Integer(0), Integer(1)}}, 2) == expected);
  // (1 - t)^{-1} (1 - z^2 t)^{-1} = 1 + (1 + z^2) t + (1 + z^2 + z^4) t^2
  CHECK(expected.coeff(1) == IntPolynomial{1, 0, 1});
  CHECK(expected.coeff(2) == IntPolynomial{1, 0, 1, 0, 1});
  CHECK(macdonald_poincare(BettiVector{{Integer(1)}}, 4) == teichmuller(IntPolynomial{1}, 4));
}

TEST_CASE("macdonald_poincare ghost coordinates and specialization") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> entry(-2, 5);
  for (int i = 0; i < 100; ++i) {
    BettiVector b;
    const std::size_t len = 1 + rng() % 7;
    for (std::size_t k = 0; k < len; ++k) b.b.emplace_back(entry(rng));
    const WP m = macdonald_poincare(b, 6);
    const IntPolynomial P = poincare_polynomial(b);
    for (std::size_t n = 1; n <= 6; ++n) CHECK(ghost(m).coord(n) == P.substitute_power(n));
    CHECK(specialize(m, Integer(1)) == sigma_int(euler_characteristic(b), 6));
    CHECK(euler_characteristic(b) == P.evaluate(Integer(1)));
  }
}
