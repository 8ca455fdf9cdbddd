#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wittzeta/int_poly.hpp"
#include "wittzeta/integer.hpp"

namespace wittzeta {

// True when the polynomial (coefficients reduced mod p) is irreducible over
// F_p. Uses the gcd(f, z^{p^i} - z) test for i <= deg/2.
bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p);

// Smallest monic irreducible of degree k over F_p, ordering candidates by
// their coefficient tuple (c_0, c_1, ..., c_{k-1}) lexicographically.
// Degree 1 gives z.
IntPolynomial find_irreducible(std::uint64_t p, unsigned k);

// F_{p^k} = F_p[z]/(modulus). Elements are residue polynomials of degree < k,
// stored as exactly k coefficients in [0, p). An element's index is the
// integer whose base-p digits are its coefficients (c_0 least significant).
class FiniteField {
 public:
  using Element = std::vector<std::uint64_t>;

  // Uses find_irreducible(p, k) as modulus.
  FiniteField(std::uint64_t p, unsigned k);
  // Throws InputError unless p is prime and modulus is monic irreducible.
  FiniteField(std::uint64_t p, const IntPolynomial& modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t size() const noexcept { return size_; }
  const IntPolynomial& modulus() const noexcept { return modulus_poly_; }

  Element zero() const { return Element(k_, 0); }
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element element(std::uint64_t index) const;
  std::uint64_t index(const Element& x) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  Element pow(const Element& x, const Integer& exponent) const;
  // Throws InputError on zero.
  Element inv(const Element& x) const;
  // x -> x^p.
  Element frobenius(const Element& x) const { return pow(x, Integer(static_cast<unsigned long>(p_))); }
  bool is_zero(const Element& x) const;

 private:
  void init();

  std::uint64_t p_;
  unsigned k_;
  IntPolynomial modulus_poly_;
  std::vector<std::uint64_t> modulus_;  // monic, size k + 1
  std::uint64_t size_ = 0;
};

}  // namespace wittzeta
