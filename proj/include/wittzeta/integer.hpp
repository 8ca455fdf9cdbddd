#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

namespace wittzeta {

using Integer = mpz_class;

Integer ipow(const Integer& base, std::uint64_t exponent);

// Rising-factorial binomial a(a+1)...(a+n-1)/n!, i.e. the coefficient of t^n
// in (1-t)^{-a}. Valid for negative a.
Integer multichoose(const Integer& a, std::size_t n);

// Parses an optionally signed decimal integer. Throws InputError.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& x);

bool is_prime(const Integer& n);

// (p, k) with q = p^k and p prime, or nullopt.
std::optional<std::pair<Integer, std::uint64_t>> prime_power(const Integer& q);

int mobius(std::uint64_t n);

// Narrowing conversion that throws InputError when x does not fit.
std::uint64_t to_u64(const Integer& x, std::string_view what);
std::int64_t to_i64(const Integer& x, std::string_view what);

}  // namespace wittzeta
