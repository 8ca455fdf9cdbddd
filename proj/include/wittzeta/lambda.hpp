#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wittzeta/errors.hpp"
#include "wittzeta/int_poly.hpp"
#include "wittzeta/integer.hpp"
#include "wittzeta/series.hpp"
#include "wittzeta/witt.hpp"

namespace wittzeta {

/// sigma_t(a) = (1 - t)^{-a}; sigma^n(a) = C(a + n - 1, n). Negative a is fine.
WittVector<Integer> sigma_int(const Integer& a, std::size_t precision);

/// sigma_t on Z[z]: f = sum c_i z^i maps to prod (1 - z^i t)^{-c_i}, the Witt
/// sum of c_i copies of [z^i].
WittVector<IntPolynomial> sigma_poly(const IntPolynomial& f, std::size_t precision);

/// lambda_t = sigma_{-t}^{-1}, read back from a sigma image.
template <GhostCapableRing A>
TruncatedSeries<A> lambda_from_sigma(const WittVector<A>& s) {
  return series_inverse(negate_variable(s.series()));
}

/// sigma_u on W(A): the element of W_M(W_{N'}(A)), N' = floor(N / M), whose
/// outer ghost coordinate n is F_n(P) truncated to N'. On Teichmüller sums
/// this is the sum of double Teichmüller elements ([1] - [a] u)^{-1}.
///
/// The ghost-coordinate rule is used for every P, not only Teichmüller sums.
template <GhostCapableRing A>
WittVector<WittVector<A>> sigma_witt(const WittVector<A>& p, std::size_t outer_precision) {
  if (outer_precision == 0) throw InputError("sigma_witt: outer precision must be positive");
  if (p.precision() < outer_precision) {
    throw PrecisionError("sigma_witt: inner precision must be at least the outer precision",
                         outer_precision, p.precision());
  }
  const std::size_t inner = p.precision() / outer_precision;
  std::vector<WittVector<A>> coords;
  coords.reserve(outer_precision);
  for (std::size_t n = 1; n <= outer_precision; ++n) coords.push_back(frobenius(p, n).truncate(inner));
  try {
    return ghost_inverse(GhostVector<WittVector<A>>(std::move(coords)));
  } catch (const IntegralityError& e) {
    throw InvariantError(std::string("sigma_witt: outer ghost vector failed to integrate: ") + e.what());
  }
}

/// Betti numbers b_0 .. b_2m. Entries may be negative; the formula is formal.
struct BettiVector {
  std::vector<Integer> b;
};

/// P(X, z) = sum (-1)^i b_i z^i.
IntPolynomial poincare_polynomial(const BettiVector& betti);

/// chi = sum (-1)^i b_i.
Integer euler_characteristic(const BettiVector& betti);

/// Generating series of Poincaré polynomials of symmetric powers:
/// sum_i (-1)^i b_i [z^i] = prod (1 - z^i t)^{(-1)^{i+1} b_i}.
WittVector<IntPolynomial> macdonald_poincare(const BettiVector& betti, std::size_t precision);

/// Coefficient-wise z := value.
WittVector<Integer> specialize(const WittVector<IntPolynomial>& p, const Integer& value);

}  // namespace wittzeta
