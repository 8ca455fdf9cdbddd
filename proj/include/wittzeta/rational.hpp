#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wittzeta/errors.hpp"
#include "wittzeta/int_poly.hpp"
#include "wittzeta/series.hpp"
#include "wittzeta/witt.hpp"

namespace wittzeta {

// num / den in the variable t, both with constant term 1.
struct RationalFunction {
  IntPolynomial num;
  IntPolynomial den;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
};

// No rational function within the degree bound reproduces the series.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

// Power series expansion of num/den up to t^precision.
TruncatedSeries<Integer> expand(const RationalFunction& f, std::size_t precision);

// Finds num/den with deg <= dmax, constant terms 1, whose expansion matches
// the series to its full precision. Tries denominator degrees 0, 1, ..., dmax
// and returns the first (minimal) one; the denominator coefficients come from
// an exact linear solve of the coefficient recurrence. Common factors
// (1 - c t) with integer c are cancelled.
// Needs precision >= 2 dmax (at least dmax equations for dmax unknowns).
RationalFunction rational_reconstruct(const WittVector<Integer>& series, std::size_t dmax);

// Splits f (constant term 1) into factors (1 - c t)^m with integer c, as
// (c, m) pairs in increasing |c| then c order, plus the unfactored rest.
std::pair<std::vector<std::pair<Integer, std::size_t>>, IntPolynomial> linear_factors(const IntPolynomial& f);

// "1/((1-t)(1-2t))"-style rendering; nullopt unless every root of the
// denominator is the reciprocal of an integer.
std::optional<std::string> factored_form(const RationalFunction& f);

}  // namespace wittzeta
