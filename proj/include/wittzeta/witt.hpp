#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/errors.hpp"
#include "wittzeta/ring.hpp"
#include "wittzeta/series.hpp"

namespace wittzeta {

/// An element of the truncated big Witt ring W_N(A): a series 1 + a_1 t + ...
/// + a_N t^N. Witt addition is series multiplication; Witt multiplication is
/// the pointwise product of ghost coordinates, pulled back through the Newton
/// recursion (A is torsion-free, so the pull-back is unique).
///
/// Equality compares up to the smaller of the two precisions.
///
/// For nested rings (A itself a Witt ring) every coefficient must have the
/// same shape, i.e. W_N(W_M(Z)) uses one inner precision M throughout.
template <GhostCapableRing A>
class WittVector {
 public:
  explicit WittVector(TruncatedSeries<A> series) : series_(std::move(series)) {
    if (series_.precision() < 1) throw InputError("Witt vector precision must be at least 1");
    if (!ring::is_one(series_[0])) {
      throw InputError("Witt vector constant term must be 1, got " + ring::to_string(series_[0]));
    }
    for (std::size_t i = 1; i <= series_.precision(); ++i) {
      if (!RingOps<A>::same_shape(series_[0], series_[i])) {
        throw InputError("Witt vector coefficients must share one inner precision");
      }
    }
  }

  // The additive identity (the series 1). `proto` is any element of A of the
  // right shape.
  static WittVector zero(const A& proto, std::size_t precision) {
    return WittVector(TruncatedSeries<A>::constant(ring::one_like(proto), precision));
  }

  // 1 + tail[0] t + tail[1] t^2 + ...; `proto` supplies the constant term.
  static WittVector from_tail(const A& proto, const std::vector<A>& tail) {
    std::vector<A> coeffs;
    coeffs.reserve(tail.size() + 1);
    coeffs.push_back(ring::one_like(proto));
    coeffs.insert(coeffs.end(), tail.begin(), tail.end());
    return WittVector(TruncatedSeries<A>(std::move(coeffs)));
  }

  std::size_t precision() const noexcept { return series_.precision(); }
  const TruncatedSeries<A>& series() const noexcept { return series_; }
  // Coefficient of t^n, 0 <= n <= precision().
  const A& coeff(std::size_t n) const { return series_[n]; }
  const A& proto() const noexcept { return series_[0]; }

  WittVector truncate(std::size_t precision) const { return WittVector(series_.truncate(precision)); }

  friend bool operator==(const WittVector& a, const WittVector& b) {
    return series_equal(a.series_, b.series_);
  }

 private:
  TruncatedSeries<A> series_;
};

/// Ghost coordinates (b_1, ..., b_N), stored 0-based; `coord(n)` is 1-based.
template <GhostCapableRing A>
class GhostVector {
 public:
  explicit GhostVector(std::vector<A> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw InputError("ghost vector must have at least one coordinate");
  }

  std::size_t size() const noexcept { return coords_.size(); }
  const A& coord(std::size_t n) const { return coords_.at(n - 1); }
  const std::vector<A>& coords() const noexcept { return coords_; }

  friend GhostVector operator+(const GhostVector& a, const GhostVector& b) {
    return zip(a, b, [](const A& x, const A& y) { return ring::add(x, y); });
  }
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b) {
    return zip(a, b, [](const A& x, const A& y) { return ring::mul(x, y); });
  }
  friend GhostVector operator-(const GhostVector& a) {
    std::vector<A> out;
    out.reserve(a.size());
    for (const A& x : a.coords_) out.push_back(ring::neg(x));
    return GhostVector(std::move(out));
  }
  friend bool operator==(const GhostVector& a, const GhostVector& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (!ring::equal(a.coords_[i], b.coords_[i])) return false;
    }
    return true;
  }

 private:
  template <class F>
  static GhostVector zip(const GhostVector& a, const GhostVector& b, F f) {
    const std::size_t n = std::min(a.size(), b.size());
    std::vector<A> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f(a.coords_[i], b.coords_[i]));
    return GhostVector(std::move(out));
  }

  std::vector<A> coords_;
};

template <GhostCapableRing A>
WittVector<A> witt_add(const WittVector<A>& p, const WittVector<A>& q) {
  return WittVector<A>(series_mul(p.series(), q.series()));
}

template <GhostCapableRing A>
WittVector<A> witt_neg(const WittVector<A>& p) {
  return WittVector<A>(series_inverse(p.series()));
}

template <GhostCapableRing A>
WittVector<A> witt_sub(const WittVector<A>& p, const WittVector<A>& q) {
  return witt_add(p, witt_neg(q));
}

// n-fold Witt sum of p (negative n subtracts).
template <GhostCapableRing A>
WittVector<A> witt_scale(const WittVector<A>& p, std::int64_t n) {
  return WittVector<A>(series_pow(p.series(), n));
}

/// Teichmüller element [a] = (1 - a t)^{-1}, coefficients a^n.
template <GhostCapableRing A>
WittVector<A> teichmuller(const A& a, std::size_t precision) {
  std::vector<A> coeffs;
  coeffs.reserve(precision + 1);
  coeffs.push_back(ring::one_like(a));
  for (std::size_t n = 1; n <= precision; ++n) coeffs.push_back(ring::mul(coeffs.back(), a));
  return WittVector<A>(TruncatedSeries<A>(std::move(coeffs)));
}

/// Ghost coordinates: t P'/P = sum b_n t^n.
template <GhostCapableRing A>
GhostVector<A> ghost(const WittVector<A>& p) {
  const TruncatedSeries<A> log_derivative = series_mul(t_derivative(p.series()), series_inverse(p.series()));
  std::vector<A> coords(log_derivative.coeffs().begin() + 1, log_derivative.coeffs().end());
  return GhostVector<A>(std::move(coords));
}

/// Inverse of the ghost map through the Newton recursion
///   n a_n = b_n + a_1 b_{n-1} + ... + a_{n-1} b_1.
/// Throws IntegralityError when some a_n is not in A, i.e. `b` is not the
/// ghost vector of any element of W_N(A).
template <GhostCapableRing A>
WittVector<A> ghost_inverse(const GhostVector<A>& b) {
  const std::size_t N = b.size();
  std::vector<A> a;
  a.reserve(N + 1);
  a.push_back(ring::one_like(b.coord(1)));
  for (std::size_t n = 1; n <= N; ++n) {
    A acc = b.coord(n);
    for (std::size_t i = 1; i < n; ++i) acc = ring::add(acc, ring::mul(a[i], b.coord(n - i)));
    auto an = ring::divide_exact(acc, static_cast<std::int64_t>(n));
    if (!an) {
      throw IntegralityError("ghost_inverse: " + ring::to_string(acc) + " is not divisible by " +
                                 std::to_string(n) + " at degree " + std::to_string(n),
                             n, ring::to_string(acc));
    }
    a.push_back(std::move(*an));
  }
  return WittVector<A>(TruncatedSeries<A>(std::move(a)));
}

template <GhostCapableRing A>
WittVector<A> witt_mul(const WittVector<A>& p, const WittVector<A>& q) {
  try {
    return ghost_inverse(ghost(p) * ghost(q));
  } catch (const IntegralityError& e) {
    throw InvariantError(std::string("witt_mul: product of valid Witt vectors failed to integrate: ") +
                         e.what());
  }
}

/// Frobenius F_n, characterized by gh_m(F_n P) = gh_{mn}(P). The result has
/// precision floor(N / n).
template <GhostCapableRing A>
WittVector<A> frobenius(const WittVector<A>& p, std::size_t n) {
  if (n == 0) throw InputError("frobenius: index must be positive");
  const std::size_t out_precision = p.precision() / n;
  if (out_precision == 0) {
    throw PrecisionError("frobenius F_" + std::to_string(n) + " leaves precision 0", n, p.precision());
  }
  if (n == 1) return p;
  const GhostVector<A> g = ghost(p);
  std::vector<A> sub;
  sub.reserve(out_precision);
  for (std::size_t m = 1; m <= out_precision; ++m) sub.push_back(g.coord(m * n));
  try {
    return ghost_inverse(GhostVector<A>(std::move(sub)));
  } catch (const IntegralityError& e) {
    throw InvariantError(std::string("frobenius: image failed to integrate: ") + e.what());
  }
}

template <GhostCapableRing A>
WittVector<A> operator+(const WittVector<A>& p, const WittVector<A>& q) { return witt_add(p, q); }
template <GhostCapableRing A>
WittVector<A> operator-(const WittVector<A>& p, const WittVector<A>& q) { return witt_sub(p, q); }
template <GhostCapableRing A>
WittVector<A> operator-(const WittVector<A>& p) { return witt_neg(p); }
template <GhostCapableRing A>
WittVector<A> operator*(const WittVector<A>& p, const WittVector<A>& q) { return witt_mul(p, q); }

// W_N(A) is itself ghost-capable: the integer n acts as n-fold Witt addition,
// so dividing by n is taking an n-th root of the series.
template <GhostCapableRing A>
struct RingOps<WittVector<A>> {
  using W = WittVector<A>;
  static W zero_like(const W& a) { return W::zero(a.proto(), a.precision()); }
  static W one_like(const W& a) { return teichmuller(ring::one_like(a.proto()), a.precision()); }
  static W add(const W& a, const W& b) { return witt_add(a, b); }
  static W neg(const W& a) { return witt_neg(a); }
  static W mul(const W& a, const W& b) { return witt_mul(a, b); }
  static W mul_int(const W& a, std::int64_t n) { return witt_scale(a, n); }
  static std::optional<W> divide_exact(const W& a, std::int64_t n) {
    auto root = try_series_nth_root(a.series(), n);
    if (!root) return std::nullopt;
    return W(std::move(*root));
  }
  static bool equal(const W& a, const W& b) { return a == b; }
  static bool same_shape(const W& a, const W& b) {
    return a.precision() == b.precision() && RingOps<A>::same_shape(a.proto(), b.proto());
  }
  static std::string to_string(const W& a) {
    std::ostringstream os;
    os << "(1";
    for (std::size_t n = 1; n <= a.precision(); ++n) os << ", " << ring::to_string(a.coeff(n));
    os << ")";
    return os.str();
  }
};

static_assert(GhostCapableRing<WittVector<Integer>>);
static_assert(GhostCapableRing<WittVector<WittVector<Integer>>>);

}  // namespace wittzeta
