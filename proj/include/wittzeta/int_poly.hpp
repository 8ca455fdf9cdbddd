#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wittzeta/integer.hpp"
#include "wittzeta/ring.hpp"

namespace wittzeta {

// Dense univariate polynomial with Integer coefficients, ascending order.
// Trailing zero coefficients are always stripped, so the zero polynomial has
// no coefficients at all.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);
  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t degree);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of z^i; zero past the degree.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  Integer evaluate(const Integer& z) const;
  // f(z) -> f(z^k).
  IntPolynomial substitute_power(std::size_t k) const;

  std::string to_string(std::string_view var = "z") const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const Integer& c);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

 private:
  void normalize();

  std::vector<Integer> coeffs_;
};

// Coefficient-wise exact division; nullopt if any coefficient is not
// divisible by n.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& f, std::int64_t n);

template <>
struct RingOps<IntPolynomial> {
  static IntPolynomial zero_like(const IntPolynomial&) { return IntPolynomial(); }
  static IntPolynomial one_like(const IntPolynomial&) { return IntPolynomial::constant(1); }
  static IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
  static IntPolynomial neg(const IntPolynomial& a) { return -a; }
  static IntPolynomial mul(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }
  static IntPolynomial mul_int(const IntPolynomial& a, std::int64_t n) { return a * Integer(n); }
  static std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, std::int64_t n) {
    return wittzeta::divide_exact(a, n);
  }
  static bool equal(const IntPolynomial& a, const IntPolynomial& b) { return a == b; }
  static bool same_shape(const IntPolynomial&, const IntPolynomial&) { return true; }
  static std::string to_string(const IntPolynomial& a) { return a.to_string(); }
};

static_assert(GhostCapableRing<IntPolynomial>);

}  // namespace wittzeta
