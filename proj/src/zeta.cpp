#include "wittzeta/zeta.hpp"

#include <string>

#include "wittzeta/errors.hpp"
#include "wittzeta/lambda.hpp"

namespace wittzeta {

WittVector<Integer> zeta_from_counts(const PointCounts& counts, std::size_t precision) {
  if (precision == 0) throw InputError("zeta precision must be positive");
  if (counts.range() < precision) {
    throw PrecisionError("zeta_from_counts: point counts too short", precision, counts.range());
  }
  std::vector<Integer> ghost_coords(counts.counts.begin(), counts.counts.begin() + precision);
  try {
    return ghost_inverse(GhostVector<Integer>(std::move(ghost_coords)));
  } catch (const IntegralityError& e) {
    throw IntegralityError("point counts are not the zeta function of a variety at this precision (degree " +
                               std::to_string(e.degree()) + ")",
                           e.degree(), e.residue());
  }
}

std::vector<Integer> closed_points_from_counts(const PointCounts& counts, std::size_t precision) {
  if (counts.range() < precision) {
    throw PrecisionError("euler_product_zeta: point counts too short", precision, counts.range());
  }
  std::vector<Integer> closed;
  closed.reserve(precision);
  for (std::size_t d = 1; d <= precision; ++d) {
    Integer sum = 0;
    for (std::size_t e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      const int mu = mobius(e);
      if (mu != 0) sum += mu * counts.at(d / e);
    }
    auto a = RingOps<Integer>::divide_exact(sum, static_cast<std::int64_t>(d));
    if (!a || *a < 0) {
      throw IntegralityError("point counts give " + to_string(sum) + "/" + std::to_string(d) +
                                 " closed points of degree " + std::to_string(d),
                             d, to_string(sum));
    }
    closed.push_back(*a);
  }
  return closed;
}

WittVector<Integer> euler_product_zeta(const PointCounts& counts, std::size_t precision) {
  if (precision == 0) throw InputError("zeta precision must be positive");
  const std::vector<Integer> closed = closed_points_from_counts(counts, precision);
  TruncatedSeries<Integer> product = TruncatedSeries<Integer>::constant(1, precision);
  for (std::size_t d = 1; d <= precision; ++d) {
    if (closed[d - 1] == 0) continue;
    // (1 - t^d)^{-a} = sum_j C(a + j - 1, j) t^{dj}
    std::vector<Integer> factor(precision + 1, Integer(0));
    for (std::size_t j = 0; j * d <= precision; ++j) factor[j * d] = multichoose(closed[d - 1], j);
    product = series_mul(product, TruncatedSeries<Integer>(std::move(factor)));
  }
  return WittVector<Integer>(std::move(product));
}

PointCounts base_change(const PointCounts& counts, std::size_t r) {
  if (r == 0) throw InputError("base_change: r must be positive");
  const std::size_t range = counts.range() / r;
  if (range == 0) throw PrecisionError("base_change: point counts too short", r, counts.range());
  PointCounts out{ipow(counts.q, r), {}};
  for (std::size_t m = 1; m <= range; ++m) out.counts.push_back(counts.at(r * m));
  return out;
}

PointCounts sym_power_counts(const PointCounts& counts, std::size_t n, std::size_t range) {
  PointCounts out{counts.q, {}};
  if (n == 0) {
    out.counts.assign(range, Integer(1));
    return out;
  }
  if (counts.range() < n * range) {
    throw PrecisionError("sym_power_counts: point counts must range n*R", n * range, counts.range());
  }
  for (std::size_t r = 1; r <= range; ++r) {
    std::vector<Integer> sub;
    sub.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) sub.push_back(counts.at(i * r));
    try {
      out.counts.push_back(ghost_inverse(GhostVector<Integer>(std::move(sub))).coeff(n));
    } catch (const IntegralityError& e) {
      throw IntegralityError("sym_power_counts: inconsistent point counts at r = " + std::to_string(r) +
                                 ", degree " + std::to_string(e.degree()),
                             e.degree(), e.residue());
    }
  }
  return out;
}

WittVector<Integer> zeta(const VarietySpec& spec, std::size_t precision, const CountingOptions& options) {
  return zeta_from_counts(point_counts(spec, precision, options), precision);
}

WittVector<Integer> sym_zeta(const VarietySpec& spec, std::size_t n, std::size_t precision,
                             const CountingOptions& options) {
  if (precision == 0) throw InputError("zeta precision must be positive");
  validate(spec);
  if (n == 0) return teichmuller(Integer(1), precision);
  const PointCounts counts = point_counts(spec, n * precision, options);
  return zeta_from_counts(sym_power_counts(counts, n, precision), precision);
}

WittVector<WittVector<Integer>> zeta_generating_series(const VarietySpec& spec, std::size_t outer_precision,
                                                       std::size_t inner_precision,
                                                       const CountingOptions& options) {
  if (outer_precision == 0 || inner_precision == 0) throw InputError("precisions must be positive");
  const std::size_t total = outer_precision * inner_precision;
  return sigma_witt(zeta(spec, total, options), outer_precision);
}

}  // namespace wittzeta
