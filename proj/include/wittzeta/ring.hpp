#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "wittzeta/integer.hpp"

namespace wittzeta {

// Arithmetic of a coefficient ring, specialized per type.
//
// Every operation takes its operands by value semantics and returns a fresh
// element. `zero_like` / `one_like` build constants shaped like the argument
// (for truncated Witt vectors the shape is the precision). `divide_exact(x, n)`
// returns the unique y with n*y == x, or nullopt when no such y exists; the
// rings used here are torsion-free so y is unique when it exists.
template <class A>
struct RingOps;

template <class A>
concept GhostCapableRing =
    std::copy_constructible<A> && requires(const A& a, const A& b, std::int64_t n) {
      { RingOps<A>::zero_like(a) } -> std::same_as<A>;
      { RingOps<A>::one_like(a) } -> std::same_as<A>;
      { RingOps<A>::add(a, b) } -> std::same_as<A>;
      { RingOps<A>::neg(a) } -> std::same_as<A>;
      { RingOps<A>::mul(a, b) } -> std::same_as<A>;
      { RingOps<A>::mul_int(a, n) } -> std::same_as<A>;
      { RingOps<A>::divide_exact(a, n) } -> std::same_as<std::optional<A>>;
      { RingOps<A>::equal(a, b) } -> std::same_as<bool>;
      { RingOps<A>::same_shape(a, b) } -> std::same_as<bool>;
      { RingOps<A>::to_string(a) } -> std::same_as<std::string>;
    };

template <>
struct RingOps<Integer> {
  static Integer zero_like(const Integer&) { return Integer(0); }
  static Integer one_like(const Integer&) { return Integer(1); }
  static Integer add(const Integer& a, const Integer& b) { return a + b; }
  static Integer neg(const Integer& a) { return -a; }
  static Integer mul(const Integer& a, const Integer& b) { return a * b; }
  static Integer mul_int(const Integer& a, std::int64_t n) { return a * Integer(n); }
  static std::optional<Integer> divide_exact(const Integer& a, std::int64_t n) {
    const Integer d(n);
    if (!mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
  }
  static bool equal(const Integer& a, const Integer& b) { return a == b; }
  static bool same_shape(const Integer&, const Integer&) { return true; }
  static std::string to_string(const Integer& a) { return a.get_str(10); }
};

static_assert(GhostCapableRing<Integer>);

// Convenience wrappers so generic code reads like arithmetic.
namespace ring {

template <GhostCapableRing A>
A add(const A& a, const A& b) { return RingOps<A>::add(a, b); }
template <GhostCapableRing A>
A sub(const A& a, const A& b) { return RingOps<A>::add(a, RingOps<A>::neg(b)); }
template <GhostCapableRing A>
A neg(const A& a) { return RingOps<A>::neg(a); }
template <GhostCapableRing A>
A mul(const A& a, const A& b) { return RingOps<A>::mul(a, b); }
template <GhostCapableRing A>
A mul_int(const A& a, std::int64_t n) { return RingOps<A>::mul_int(a, n); }
template <GhostCapableRing A>
A zero_like(const A& a) { return RingOps<A>::zero_like(a); }
template <GhostCapableRing A>
A one_like(const A& a) { return RingOps<A>::one_like(a); }
template <GhostCapableRing A>
bool equal(const A& a, const A& b) { return RingOps<A>::equal(a, b); }
template <GhostCapableRing A>
bool is_zero(const A& a) { return RingOps<A>::equal(a, RingOps<A>::zero_like(a)); }
template <GhostCapableRing A>
bool is_one(const A& a) { return RingOps<A>::equal(a, RingOps<A>::one_like(a)); }
template <GhostCapableRing A>
std::optional<A> divide_exact(const A& a, std::int64_t n) { return RingOps<A>::divide_exact(a, n); }
template <GhostCapableRing A>
std::string to_string(const A& a) { return RingOps<A>::to_string(a); }

}  // namespace ring

}  // namespace wittzeta
