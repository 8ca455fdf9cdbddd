#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <span>

#include "wittzeta/errors.hpp"
#include "wittzeta/finite_field.hpp"
#include "wittzeta/sparse_poly.hpp"

using namespace wittzeta;

namespace {

using Coeffs = std::vector<std::uint64_t>;

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, std::uint64_t p) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return out;
}

// All monic polynomials of degree d over F_p.
std::vector<Coeffs> monics(std::uint64_t p, unsigned d) {
  std::vector<Coeffs> out;
  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Coeffs c(d + 1, 0);
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < d; ++i) {
      c[i] = rest % p;
      rest /= p;
    }
    c[d] = 1;
    out.push_back(c);
  }
  return out;
}

// f is reducible iff it is the product of two monics of positive degree.
bool reducible_by_pairing(const Coeffs& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; d <= k / 2; ++d) {
    for (const Coeffs& g : monics(p, d))
      for (const Coeffs& h : monics(p, k - d))
        if (mul_mod(g, h, p) == f) return true;
  }
  return false;
}

Coeffs reduced(const IntPolynomial& f, std::uint64_t p) {
  Coeffs out;
  for (const Integer& c : f.coeffs()) {
    Integer r = c % Integer(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    out.push_back(r.get_ui());
  }
  return out;
}

}  // namespace

TEST_CASE("find_irreducible examples") {
  CHECK(find_irreducible(2, 2) == IntPolynomial{1, 1, 1});
  CHECK(find_irreducible(3, 2) == IntPolynomial{1, 0, 1});
  CHECK(find_irreducible(5, 1) == IntPolynomial{0, 1});
}

TEST_CASE("find_irreducible output survives exhaustive pairing") {
  const std::vector<std::pair<std::uint64_t, unsigned>> cases = {
      {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3}};
  for (const auto& [p, k] : cases) {
    const IntPolynomial f = find_irreducible(p, k);
    CHECK(f.degree() == static_cast<long>(k));
    CHECK(f.coeffs().back() == 1);
    CHECK_FALSE(reducible_by_pairing(reduced(f, p), p));
  }
}

TEST_CASE("irreducibility test agrees with pairing on all small monics") {
  for (std::uint64_t p : {2u, 3u}) {
    for (unsigned d = 1; d <= 4; ++d) {
      for (const Coeffs& c : monics(p, d)) {
        std::vector<Integer> v(c.begin(), c.end());
        CHECK(is_irreducible_mod_p(IntPolynomial(v), p) == !reducible_by_pairing(c, p));
      }
    }
  }
}

TEST_CASE("find_irreducible is the lexicographically smallest") {
  // Candidates are ordered by (c_0, c_1, ...); every smaller one is reducible.
  for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}}) {
    const Coeffs best = reduced(find_irreducible(p, k), p);
    for (const Coeffs& c : monics(p, k)) {
      if (std::lexicographical_compare(c.begin(), c.end(), best.begin(), best.end())) {
        CHECK(reducible_by_pairing(c, p));
      }
    }
  }
}

TEST_CASE("Frobenius identity a^(p^k) = a for every field up to 64 elements") {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u, 41u, 43u, 47u, 53u, 59u, 61u}) {
    for (unsigned k = 1;; ++k) {
      std::uint64_t size = 1;
      for (unsigned i = 0; i < k; ++i) size *= p;
      if (size > 64) break;
      const FiniteField F(p, k);
      REQUIRE(F.size() == size);
      for (std::uint64_t i = 0; i < size; ++i) {
        const auto a = F.element(i);
        CHECK(F.index(a) == i);
        CHECK(F.pow(a, Integer(static_cast<unsigned long>(size))) == a);
      }
    }
  }
}

TEST_CASE("field axioms in F_9 and F_16") {
  for (const auto& [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{3, 2}, {2, 4}}) {
    const FiniteField F(p, k);
    for (std::uint64_t i = 0; i < F.size(); ++i) {
      const auto x = F.element(i);
      CHECK(F.is_zero(F.add(x, F.neg(x))));
      if (!F.is_zero(x)) CHECK(F.mul(x, F.inv(x)) == F.one());
      for (std::uint64_t j = 0; j < F.size(); ++j) {
        const auto y = F.element(j);
        CHECK(F.mul(x, y) == F.mul(y, x));
        CHECK(F.sub(F.add(x, y), y) == x);
      }
    }
    CHECK_THROWS_AS(F.inv(F.zero()), InputError);
  }
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(FiniteField(4, 1), InputError);
  CHECK_THROWS_AS(FiniteField(2, IntPolynomial{1, 0, 1}), InputError);  // z^2 + 1 = (z + 1)^2 mod 2
  CHECK_NOTHROW(FiniteField(2, IntPolynomial{1, 1, 0, 1}));
}

TEST_CASE("polynomial parser") {
  const std::vector<std::string> vars{"x", "y"};
  const auto x = SparsePolynomial::variable(2, 0);
  const auto y = SparsePolynomial::variable(2, 1);
  CHECK(parse_polynomial("y^2 - x^3 - x", vars) == y.pow(2) - x.pow(3) - x);
  CHECK(parse_polynomial("(x + 1)^2", vars) == x * x + SparsePolynomial::constant(2, Integer(2)) * x +
                                                   SparsePolynomial::constant(2, Integer(1)));
  CHECK(parse_polynomial("-x*-y", vars) == x * y);
  CHECK(parse_polynomial("3 - 3", vars).is_zero());
  CHECK_THROWS_AS(parse_polynomial("x + z", vars), InputError);
  CHECK_THROWS_AS(parse_polynomial("x^", vars), InputError);
  CHECK_THROWS_AS(parse_polynomial("(x + 1", vars), InputError);
  CHECK_THROWS_AS(parse_polynomial("x^y", vars), InputError);
  CHECK_THROWS_AS(parse_polynomial("", vars), InputError);
}

TEST_CASE("count_affine_points examples") {
  const std::vector<std::string> vars{"x", "y"};
  const std::vector<SparsePolynomial> curve{parse_polynomial("y^2 - x^3 - x", vars)};
  CHECK(count_affine_points(curve, 2, FiniteField(5, 1)) == 3);
  const auto points = affine_points(curve, 2, FiniteField(5, 1));
  CHECK(points == std::vector<std::vector<std::uint64_t>>{{0, 0}, {2, 0}, {3, 0}});
  CHECK(count_affine_points(std::span<const SparsePolynomial>{}, 1, FiniteField(2, 2)) == 4);
  const std::vector<SparsePolynomial> unit{SparsePolynomial::constant(1, Integer(1))};
  CHECK(count_affine_points(unit, 1, FiniteField(7, 1)) == 0);
  // x^2 + x + 1 has its two roots in F_4 and none in F_2.
  const std::vector<SparsePolynomial> quad{parse_polynomial("x^2 + x + 1", {"x"})};
  CHECK(count_affine_points(quad, 1, FiniteField(2, 1)) == 0);
  CHECK(count_affine_points(quad, 1, FiniteField(2, 2)) == 2);
}

TEST_CASE("enumeration budget") {
  const FiniteField F(2, 4);
  CHECK(check_enumeration_budget(F, 2, 256, "test") == 256);
  CHECK_THROWS_AS(check_enumeration_budget(F, 2, 255, "test"), BudgetError);
  const std::vector<SparsePolynomial> none;
  CHECK_THROWS_AS(count_affine_points(none, 3, F, 100), BudgetError);
}
