#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "wittzeta/integer.hpp"
#include "wittzeta/sparse_poly.hpp"

namespace wittzeta {

struct VarietySpec;

// Affine space A^m over F_q.
struct AffineSpec {
  std::uint64_t dim = 0;
  Integer q;
};

// Projective space P^m over F_q.
struct ProjectiveSpec {
  std::uint64_t dim = 0;
  Integer q;
};

// y^2 = x^3 + a x + b over F_p, p > 3, together with its point at infinity.
struct EllipticSpec {
  std::uint64_t p = 0;
  Integer a;
  Integer b;
};

struct ProductSpec {
  std::vector<VarietySpec> factors;
};

// Point counts supplied directly: counts[r-1] = #X(F_{q^r}).
struct CountsSpec {
  Integer q;
  std::vector<Integer> counts;
};

// Affine variety cut out by polynomial equations over F_p.
struct EquationsSpec {
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> polys;
};

struct VarietySpec {
  std::variant<AffineSpec, ProjectiveSpec, EllipticSpec, ProductSpec, CountsSpec, EquationsSpec> kind;
};

// N_r = #X(F_{q^r}) for r = 1..R.
struct PointCounts {
  Integer q;
  std::vector<Integer> counts;

  std::size_t range() const noexcept { return counts.size(); }
  // 1-based.
  const Integer& at(std::size_t r) const { return counts.at(r - 1); }
};

struct CountingOptions {
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

// Throws InputError describing the first violated invariant.
void validate(const VarietySpec& spec);

// Base field size q.
Integer field_size(const VarietySpec& spec);

std::vector<SparsePolynomial> parsed_equations(const EquationsSpec& spec);

// Exact N_1..N_R. Elliptic curves count F_p points by enumeration and extend
// with the trace recursion s_r = a s_{r-1} - p s_{r-2}. Products multiply
// pointwise.
PointCounts point_counts(const VarietySpec& spec, std::size_t range, const CountingOptions& options = {});

// Elliptic curve over F_{p^k}, counted by the trace recursion: the trace over
// the extension is s_k, and its own recursion runs with q = p^k.
PointCounts elliptic_counts_over_extension(const EllipticSpec& spec, std::size_t k, std::size_t range,
                                           const CountingOptions& options = {});

// Projective count (affine solutions plus the point at infinity) of the curve
// over F_{p^k}, by enumerating x and looking up square roots.
Integer count_elliptic_points(const EllipticSpec& spec, unsigned k, const CountingOptions& options = {});

// |q^r + 1 - N_r| <= 2 q^{r/2}, checked as (q^r + 1 - N_r)^2 <= 4 q^r.
bool within_weil_bound(const Integer& q, std::size_t r, const Integer& count);

struct BuiltinSpec {
  std::string name;
  VarietySpec spec;
};

// A^1, P^1, P^2 over F_2 and F_5, E: y^2 = x^3 + x over F_5, and E x E.
const std::vector<BuiltinSpec>& builtin_specs();
// Throws InputError for unknown names.
const VarietySpec& builtin_spec(const std::string& name);

}  // namespace wittzeta
