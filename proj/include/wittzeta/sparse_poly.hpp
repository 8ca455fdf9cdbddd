#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wittzeta/finite_field.hpp"
#include "wittzeta/integer.hpp"

namespace wittzeta {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

// Multivariate polynomial with integer coefficients, stored as a sparse map
// from exponent vectors to nonzero coefficients. Coefficients are reduced
// mod p only when evaluated over a finite field.
class SparsePolynomial {
 public:
  using Exponents = std::vector<unsigned>;

  explicit SparsePolynomial(std::size_t num_vars) : num_vars_(num_vars) {}
  static SparsePolynomial constant(std::size_t num_vars, const Integer& c);
  static SparsePolynomial variable(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::map<Exponents, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  SparsePolynomial pow(unsigned exponent) const;

  FiniteField::Element evaluate(const FiniteField& field, std::span<const FiniteField::Element> point) const;

  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) = default;

 private:
  void add_term(const Exponents& e, const Integer& c);

  std::size_t num_vars_;
  std::map<Exponents, Integer> terms_;
};

// Grammar: integers, the given variable names, + - * ^ and parentheses.
// Exponents are nonnegative integer literals. Throws InputError.
SparsePolynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

// p^{k * num_vars}; throws BudgetError when it exceeds `budget`.
std::uint64_t check_enumeration_budget(const FiniteField& field, std::size_t num_vars, std::uint64_t budget,
                                       std::string_view what);

// Number of points of F^num_vars at which every polynomial vanishes.
Integer count_affine_points(std::span<const SparsePolynomial> polys, std::size_t num_vars,
                            const FiniteField& field, std::uint64_t budget = kDefaultEnumerationBudget);

// The common zeros themselves, as tuples of element indices.
std::vector<std::vector<std::uint64_t>> affine_points(std::span<const SparsePolynomial> polys,
                                                      std::size_t num_vars, const FiniteField& field,
                                                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace wittzeta
