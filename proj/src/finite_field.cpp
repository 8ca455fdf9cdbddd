#include "wittzeta/finite_field.hpp"

#include <string>

#include "wittzeta/errors.hpp"

namespace wittzeta {

namespace {

using FpPoly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly reduce_coeffs(const IntPolynomial& f, std::uint64_t p) {
  FpPoly out;
  const Integer P(static_cast<unsigned long>(p));
  for (const Integer& c : f.coeffs()) {
    Integer r = c % P;
    if (r < 0) r += P;
    out.push_back(r.get_ui());
  }
  trim(out);
  return out;
}

// Remainder of a by b (b nonzero).
FpPoly poly_mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(factor, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

FpPoly poly_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(out);
  return out;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    FpPoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// base^(p) mod f by square-and-multiply on the exponent p.
FpPoly poly_pow_mod(const FpPoly& base, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
  FpPoly result{1};
  FpPoly b = poly_mod(base, f, p);
  while (e > 0) {
    if (e & 1) result = poly_mod(poly_mul(result, b, p), f, p);
    e >>= 1;
    if (e > 0) b = poly_mod(poly_mul(b, b, p), f, p);
  }
  return result;
}

void require_prime(std::uint64_t p) {
  if (p < 2 || p >= (1ull << 32) || !is_prime(Integer(static_cast<unsigned long>(p)))) {
    throw InputError("characteristic must be a prime below 2^32, got " + std::to_string(p));
  }
}

}  // namespace

bool is_irreducible_mod_p(const IntPolynomial& f, std::uint64_t p) {
  require_prime(p);
  const FpPoly g = reduce_coeffs(f, p);
  if (g.size() < 2) return false;
  const std::size_t deg = g.size() - 1;
  if (deg == 1) return true;
  const FpPoly z{0, 1};
  FpPoly h = z;
  for (std::size_t i = 1; i <= deg / 2; ++i) {
    h = poly_pow_mod(h, p, g, p);
    FpPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (poly_gcd(g, diff, p).size() > 1) return false;
  }
  return true;
}

IntPolynomial find_irreducible(std::uint64_t p, unsigned k) {
  require_prime(p);
  if (k == 0) throw InputError("find_irreducible: degree must be at least 1");
  if (k == 1) return IntPolynomial{0, 1};
  // Odometer over (c_0, ..., c_{k-1}) with c_0 most significant.
  std::vector<std::uint64_t> c(k, 0);
  for (;;) {
    std::vector<Integer> coeffs;
    coeffs.reserve(k + 1);
    for (std::uint64_t x : c) coeffs.emplace_back(static_cast<unsigned long>(x));
    coeffs.emplace_back(1);
    IntPolynomial f(std::move(coeffs));
    if (is_irreducible_mod_p(f, p)) return f;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++c[pos] < p) break;
      c[pos] = 0;
      if (pos == 0) throw InvariantError("find_irreducible: exhausted candidates");
    }
  }
}

FiniteField::FiniteField(std::uint64_t p, unsigned k) : p_(p), k_(k), modulus_poly_(find_irreducible(p, k)) {
  init();
}

FiniteField::FiniteField(std::uint64_t p, const IntPolynomial& modulus) : p_(p), modulus_poly_(modulus) {
  require_prime(p);
  if (modulus.degree() < 1 || modulus.coeffs().back() != 1) {
    throw InputError("field modulus must be monic of degree >= 1");
  }
  if (!is_irreducible_mod_p(modulus, p)) {
    throw InputError("field modulus " + modulus.to_string() + " is reducible mod " + std::to_string(p));
  }
  k_ = static_cast<unsigned>(modulus.degree());
  init();
}

void FiniteField::init() {
  require_prime(p_);
  modulus_ = reduce_coeffs(modulus_poly_, p_);
  Integer size = ipow(Integer(static_cast<unsigned long>(p_)), k_);
  if (mpz_sizeinbase(size.get_mpz_t(), 2) > 62) {
    throw InputError("field F_" + std::to_string(p_) + "^" + std::to_string(k_) + " is too large");
  }
  size_ = to_u64(size, "field size");
}

FiniteField::Element FiniteField::one() const {
  Element e(k_, 0);
  e[0] = 1 % p_;
  return e;
}

FiniteField::Element FiniteField::from_int(std::int64_t value) const {
  Element e(k_, 0);
  const auto sp = static_cast<std::int64_t>(p_);
  std::int64_t r = value % sp;
  if (r < 0) r += sp;
  e[0] = static_cast<std::uint64_t>(r);
  return e;
}

FiniteField::Element FiniteField::element(std::uint64_t index) const {
  Element e(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    e[i] = index % p_;
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::index(const Element& x) const {
  std::uint64_t idx = 0;
  for (unsigned i = k_; i-- > 0;) idx = idx * p_ + x[i];
  return idx;
}

FiniteField::Element FiniteField::add(const Element& x, const Element& y) const {
  Element e(k_);
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t s = x[i] + y[i];
    e[i] = s >= p_ ? s - p_ : s;
  }
  return e;
}

FiniteField::Element FiniteField::neg(const Element& x) const {
  Element e(k_);
  for (unsigned i = 0; i < k_; ++i) e[i] = x[i] == 0 ? 0 : p_ - x[i];
  return e;
}

FiniteField::Element FiniteField::sub(const Element& x, const Element& y) const { return add(x, neg(y)); }

FiniteField::Element FiniteField::mul(const Element& x, const Element& y) const {
  std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + mulmod(x[i], y[j], p_)) % p_;
  }
  // Reduce with the monic modulus: z^k = -(m_0 + ... + m_{k-1} z^{k-1}).
  for (std::size_t d = prod.size(); d-- > k_;) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    const std::size_t shift = d - k_;
    for (unsigned i = 0; i < k_; ++i) {
      prod[shift + i] = (prod[shift + i] + p_ - mulmod(c, modulus_[i], p_)) % p_;
    }
  }
  prod.resize(k_);
  return prod;
}

FiniteField::Element FiniteField::pow(const Element& x, const Integer& exponent) const {
  if (exponent < 0) return pow(inv(x), -exponent);
  Element result = one();
  Element base = x;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

FiniteField::Element FiniteField::inv(const Element& x) const {
  if (is_zero(x)) throw InputError("inverse of zero in a finite field");
  return pow(x, Integer(static_cast<unsigned long>(size_ - 2)));
}

bool FiniteField::is_zero(const Element& x) const {
  for (std::uint64_t c : x) {
    if (c != 0) return false;
  }
  return true;
}

}  // namespace wittzeta
