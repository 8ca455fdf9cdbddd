#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/errors.hpp"
#include "wittzeta/ring.hpp"

namespace wittzeta {

// Power series c_0 + c_1 t + ... + c_N t^N over A, known only up to t^N.
//
// Binary operations on series of different precision work at the smaller
// precision and the result records it.
template <GhostCapableRing A>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<A> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InputError("a truncated series needs at least a constant term");
  }

  // c + 0 t + ... + 0 t^N.
  static TruncatedSeries constant(const A& c, std::size_t precision) {
    std::vector<A> coeffs;
    coeffs.reserve(precision + 1);
    coeffs.push_back(c);
    const A zero = ring::zero_like(c);
    for (std::size_t i = 0; i < precision; ++i) coeffs.push_back(zero);
    return TruncatedSeries(std::move(coeffs));
  }

  std::size_t precision() const noexcept { return coeffs_.size() - 1; }
  const A& operator[](std::size_t i) const { return coeffs_[i]; }
  const std::vector<A>& coeffs() const noexcept { return coeffs_; }

  TruncatedSeries truncate(std::size_t precision) const {
    if (precision >= this->precision()) return *this;
    return TruncatedSeries(std::vector<A>(coeffs_.begin(), coeffs_.begin() + precision + 1));
  }

 private:
  std::vector<A> coeffs_;
};

// Equality of two series up to their common precision.
template <GhostCapableRing A>
bool series_equal(const TruncatedSeries<A>& p, const TruncatedSeries<A>& q) {
  const std::size_t n = std::min(p.precision(), q.precision());
  for (std::size_t i = 0; i <= n; ++i) {
    if (!ring::equal(p[i], q[i])) return false;
  }
  return true;
}

template <GhostCapableRing A>
TruncatedSeries<A> series_add(const TruncatedSeries<A>& p, const TruncatedSeries<A>& q) {
  const std::size_t n = std::min(p.precision(), q.precision());
  std::vector<A> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) out.push_back(ring::add(p[i], q[i]));
  return TruncatedSeries<A>(std::move(out));
}

template <GhostCapableRing A>
TruncatedSeries<A> series_mul(const TruncatedSeries<A>& p, const TruncatedSeries<A>& q) {
  const std::size_t n = std::min(p.precision(), q.precision());
  std::vector<A> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    A acc = ring::mul(p[0], q[k]);
    for (std::size_t i = 1; i <= k; ++i) acc = ring::add(acc, ring::mul(p[i], q[k - i]));
    out.push_back(std::move(acc));
  }
  return TruncatedSeries<A>(std::move(out));
}

// Inverse of a series with constant term 1.
template <GhostCapableRing A>
TruncatedSeries<A> series_inverse(const TruncatedSeries<A>& p) {
  if (!ring::is_one(p[0])) {
    throw InputError("series_inverse: constant term must be 1, got " + ring::to_string(p[0]));
  }
  const std::size_t n = p.precision();
  std::vector<A> q;
  q.reserve(n + 1);
  q.push_back(p[0]);
  // q_k = -(p_1 q_{k-1} + ... + p_k q_0)
  for (std::size_t k = 1; k <= n; ++k) {
    A acc = ring::mul(p[1], q[k - 1]);
    for (std::size_t i = 2; i <= k; ++i) acc = ring::add(acc, ring::mul(p[i], q[k - i]));
    q.push_back(ring::neg(acc));
  }
  return TruncatedSeries<A>(std::move(q));
}

// p^n for any integer n; negative exponents need constant term 1.
template <GhostCapableRing A>
TruncatedSeries<A> series_pow(const TruncatedSeries<A>& p, std::int64_t n) {
  if (n < 0) return series_pow(series_inverse(p), -n);
  TruncatedSeries<A> result = TruncatedSeries<A>::constant(ring::one_like(p[0]), p.precision());
  TruncatedSeries<A> base = p;
  auto e = static_cast<std::uint64_t>(n);
  while (e > 0) {
    if (e & 1) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

// The series q with q_0 = 1 and q^n = p, or nullopt when some coefficient of
// q would leave A. Uses n p q' = q p', which gives
//   n k q_k = sum_{j<k} (k - j - n j) q_j p_{k-j}.
template <GhostCapableRing A>
std::optional<TruncatedSeries<A>> try_series_nth_root(const TruncatedSeries<A>& p, std::int64_t n,
                                                      std::size_t* failed_degree = nullptr,
                                                      std::string* residue = nullptr) {
  if (n <= 0) throw InputError("series_nth_root: root index must be positive");
  if (!ring::is_one(p[0])) {
    throw InputError("series_nth_root: constant term must be 1, got " + ring::to_string(p[0]));
  }
  if (n == 1) return p;
  const std::size_t N = p.precision();
  std::vector<A> q;
  q.reserve(N + 1);
  q.push_back(p[0]);
  for (std::size_t k = 1; k <= N; ++k) {
    const auto sk = static_cast<std::int64_t>(k);
    A acc = ring::mul_int(p[k], sk);  // j = 0 term, q_0 = 1
    for (std::size_t j = 1; j < k; ++j) {
      const auto sj = static_cast<std::int64_t>(j);
      const std::int64_t weight = sk - sj - n * sj;
      if (weight == 0) continue;
      acc = ring::add(acc, ring::mul_int(ring::mul(q[j], p[k - j]), weight));
    }
    auto qk = ring::divide_exact(acc, n * sk);
    if (!qk) {
      if (failed_degree) *failed_degree = k;
      if (residue) *residue = ring::to_string(acc);
      return std::nullopt;
    }
    q.push_back(std::move(*qk));
  }
  return TruncatedSeries<A>(std::move(q));
}

template <GhostCapableRing A>
TruncatedSeries<A> series_nth_root(const TruncatedSeries<A>& p, std::int64_t n) {
  std::size_t degree = 0;
  std::string residue;
  auto q = try_series_nth_root(p, n, &degree, &residue);
  if (!q) {
    throw IntegralityError("series_nth_root: not divisible by " + std::to_string(n) +
                               " at degree " + std::to_string(degree),
                           degree, residue);
  }
  return std::move(*q);
}

// t * dp/dt.
template <GhostCapableRing A>
TruncatedSeries<A> t_derivative(const TruncatedSeries<A>& p) {
  std::vector<A> out;
  out.reserve(p.precision() + 1);
  out.push_back(ring::zero_like(p[0]));
  for (std::size_t k = 1; k <= p.precision(); ++k) {
    out.push_back(ring::mul_int(p[k], static_cast<std::int64_t>(k)));
  }
  return TruncatedSeries<A>(std::move(out));
}

// p(t) -> p(-t).
template <GhostCapableRing A>
TruncatedSeries<A> negate_variable(const TruncatedSeries<A>& p) {
  std::vector<A> out(p.coeffs());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = ring::neg(out[k]);
  return TruncatedSeries<A>(std::move(out));
}

}  // namespace wittzeta
