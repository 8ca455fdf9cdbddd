#include "wittzeta/integer.hpp"

#include <limits>

#include "wittzeta/errors.hpp"

namespace wittzeta {

Integer ipow(const Integer& base, std::uint64_t exponent) {
  Integer result = 1;
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer multichoose(const Integer& a, std::size_t n) {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    num *= a + Integer(static_cast<unsigned long>(i));
    den *= static_cast<unsigned long>(i + 1);
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw InputError("not an integer: '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw InputError("not an integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits, 10);
}

std::string to_string(const Integer& x) { return x.get_str(10); }

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::optional<std::pair<Integer, std::uint64_t>> prime_power(const Integer& q) {
  if (q < 2) return std::nullopt;
  const std::uint64_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (std::uint64_t k = bits; k >= 1; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), k) != 0 && is_prime(root)) {
      return std::make_pair(root, k);
    }
  }
  return std::nullopt;
}

int mobius(std::uint64_t n) {
  int result = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

std::uint64_t to_u64(const Integer& x, std::string_view what) {
  if (x < 0 || mpz_sizeinbase(x.get_mpz_t(), 2) > 64) {
    throw InputError(std::string(what) + " out of range: " + to_string(x));
  }
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, x.get_mpz_t());
  return out;
}

std::int64_t to_i64(const Integer& x, std::string_view what) {
  if (!x.fits_slong_p()) {
    throw InputError(std::string(what) + " out of range: " + to_string(x));
  }
  return x.get_si();
}

}  // namespace wittzeta
