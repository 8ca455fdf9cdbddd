#include "wittzeta/lambda.hpp"

namespace wittzeta {

WittVector<Integer> sigma_int(const Integer& a, std::size_t precision) {
  std::vector<Integer> coeffs;
  coeffs.reserve(precision + 1);
  for (std::size_t n = 0; n <= precision; ++n) coeffs.push_back(multichoose(a, n));
  return WittVector<Integer>(TruncatedSeries<Integer>(std::move(coeffs)));
}

WittVector<IntPolynomial> sigma_poly(const IntPolynomial& f, std::size_t precision) {
  auto result = WittVector<IntPolynomial>::zero(IntPolynomial(), precision);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Integer& c = f.coeffs()[i];
    if (c == 0) continue;
    // (1 - z^i t)^{-c} = sum_n C(c + n - 1, n) z^{i n} t^n
    std::vector<IntPolynomial> coeffs;
    coeffs.reserve(precision + 1);
    for (std::size_t n = 0; n <= precision; ++n) {
      coeffs.push_back(IntPolynomial::monomial(multichoose(c, n), i * n));
    }
    result = witt_add(result, WittVector<IntPolynomial>(TruncatedSeries<IntPolynomial>(std::move(coeffs))));
  }
  return result;
}

IntPolynomial poincare_polynomial(const BettiVector& betti) {
  std::vector<Integer> coeffs(betti.b.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] = (i % 2 == 0) ? betti.b[i] : Integer(-betti.b[i]);
  return IntPolynomial(std::move(coeffs));
}

Integer euler_characteristic(const BettiVector& betti) { return poincare_polynomial(betti).evaluate(1); }

WittVector<IntPolynomial> macdonald_poincare(const BettiVector& betti, std::size_t precision) {
  return sigma_poly(poincare_polynomial(betti), precision);
}

WittVector<Integer> specialize(const WittVector<IntPolynomial>& p, const Integer& value) {
  std::vector<Integer> coeffs;
  coeffs.reserve(p.precision() + 1);
  for (const IntPolynomial& c : p.series().coeffs()) coeffs.push_back(c.evaluate(value));
  return WittVector<Integer>(TruncatedSeries<Integer>(std::move(coeffs)));
}

}  // namespace wittzeta
