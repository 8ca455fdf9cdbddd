#pragma once

#include <cstddef>

#include "wittzeta/integer.hpp"
#include "wittzeta/variety.hpp"
#include "wittzeta/witt.hpp"

namespace wittzeta {

// Z(X, t) at precision N from N_1..N_N: the Witt vector whose ghost
// coordinates are the point counts. Throws IntegralityError (with the
// failing degree) when the counts are not those of any variety.
WittVector<Integer> zeta_from_counts(const PointCounts& counts, std::size_t precision);

// Z(X, t) as the Euler product prod_d (1 - t^d)^{-a_d}, with closed-point
// counts a_d = (1/d) sum_{e | d} mu(e) N_{d/e}.
WittVector<Integer> euler_product_zeta(const PointCounts& counts, std::size_t precision);

// a_1..a_N of the Euler product; throws IntegralityError when some a_d is
// negative or fractional.
std::vector<Integer> closed_points_from_counts(const PointCounts& counts, std::size_t precision);

// Counts of X over F_{q^r}: N'_m = N_{rm}, as long a range as available.
PointCounts base_change(const PointCounts& counts, std::size_t r);

// N_r(Sym^n X) for r = 1..R, from (N_r, N_{2r}, ..., N_{nr}) through the
// Newton relation. Needs counts to range n R.
PointCounts sym_power_counts(const PointCounts& counts, std::size_t n, std::size_t range);

// Z(Sym^n X, t) at precision N.
WittVector<Integer> sym_zeta(const VarietySpec& spec, std::size_t n, std::size_t precision,
                             const CountingOptions& options = {});

// sum_n Z(Sym^n X, t) u^n in W_M(W_N(Z)), computed as sigma_u(Z(X, t)).
WittVector<WittVector<Integer>> zeta_generating_series(const VarietySpec& spec, std::size_t outer_precision,
                                                       std::size_t inner_precision,
                                                       const CountingOptions& options = {});

// Z(X, t) at precision N straight from a spec.
WittVector<Integer> zeta(const VarietySpec& spec, std::size_t precision, const CountingOptions& options = {});

}  // namespace wittzeta
