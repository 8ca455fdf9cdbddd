#include "wittzeta/rational.hpp"

#include <algorithm>
#include <sstream>

namespace wittzeta {

namespace {

using Rational = mpq_class;

// Solves rows * x = rhs over Q. Free variables are set to 0. nullopt when
// inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                                           std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < m; ++col) {
    std::size_t pivot = row;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[row]);
    std::swap(rhs[pivot], rhs[row]);
    const Rational inv = 1 / rows[row][col];
    for (std::size_t j = col; j < unknowns; ++j) rows[row][j] *= inv;
    rhs[row] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || rows[i][col] == 0) continue;
      const Rational f = rows[i][col];
      for (std::size_t j = col; j < unknowns; ++j) rows[i][j] -= f * rows[row][j];
      rhs[i] -= f * rhs[row];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t i = row; i < m; ++i) {
    if (rhs[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(unknowns, Rational(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

// f = (1 - c t) h ? h : nullopt.
std::optional<IntPolynomial> divide_linear(const IntPolynomial& f, const Integer& c) {
  const auto& a = f.coeffs();
  if (a.size() < 2) return std::nullopt;
  std::vector<Integer> h(a.size() - 1);
  h[0] = a[0];
  for (std::size_t i = 1; i < h.size(); ++i) h[i] = a[i] + c * h[i - 1];
  if (a.back() + c * h.back() != 0) return std::nullopt;
  return IntPolynomial(std::move(h));
}

std::vector<Integer> divisors(const Integer& n) {
  Integer rest = abs(n);
  std::vector<std::pair<Integer, unsigned>> primes;
  for (Integer d = 2; d * d <= rest && d < 1000000; ++d) {
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    if (e > 0) primes.emplace_back(d, e);
  }
  if (rest > 1) primes.emplace_back(rest, 1);  // best effort if rest is composite
  std::vector<Integer> out{1};
  for (const auto& [prime, e] : primes) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntPolynomial to_poly(const std::vector<Integer>& coeffs) { return IntPolynomial(coeffs); }

std::string compact(const IntPolynomial& f) {
  std::string s = f.to_string("t");
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string render_factors(const std::vector<std::pair<Integer, std::size_t>>& factors) {
  std::ostringstream os;
  for (const auto& [c, m] : factors) {
    os << "(1" << (c < 0 ? "+" : "-");
    const Integer mag = abs(c);
    if (mag != 1) os << mag.get_str();
    os << "t)";
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

}  // namespace

TruncatedSeries<Integer> expand(const RationalFunction& f, std::size_t precision) {
  auto pad = [precision](const IntPolynomial& p) {
    std::vector<Integer> c(precision + 1, Integer(0));
    for (std::size_t i = 0; i < p.coeffs().size() && i <= precision; ++i) c[i] = p.coeffs()[i];
    return TruncatedSeries<Integer>(std::move(c));
  };
  return series_mul(pad(f.num), series_inverse(pad(f.den)));
}

std::pair<std::vector<std::pair<Integer, std::size_t>>, IntPolynomial> linear_factors(const IntPolynomial& f) {
  std::vector<std::pair<Integer, std::size_t>> factors;
  IntPolynomial rest = f;
  if (rest.degree() < 1) return {factors, rest};
  std::vector<Integer> candidates;
  for (const Integer& d : divisors(rest.coeffs().back())) {
    candidates.push_back(d);
    candidates.push_back(-d);
  }
  std::sort(candidates.begin(), candidates.end(), [](const Integer& a, const Integer& b) {
    const Integer aa = abs(a), ab = abs(b);
    return aa != ab ? aa < ab : a < b;
  });
  for (const Integer& c : candidates) {
    std::size_t m = 0;
    while (auto h = divide_linear(rest, c)) {
      rest = std::move(*h);
      ++m;
    }
    if (m > 0) factors.emplace_back(c, m);
    if (rest.degree() < 1) break;
  }
  return {factors, rest};
}

RationalFunction rational_reconstruct(const WittVector<Integer>& series, std::size_t dmax) {
  const std::size_t N = series.precision();
  if (N < std::max<std::size_t>(2 * dmax, 1)) {
    throw PrecisionError("rational_reconstruct: precision must be at least 2*dmax", std::max<std::size_t>(2 * dmax, 1), N);
  }
  const auto& c = series.series().coeffs();
  for (std::size_t e = 0; e <= dmax; ++e) {
    // c_k + sum_{j=1}^{e} d_j c_{k-j} = 0 for k = dmax+1 .. N
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t k = dmax + 1; k <= N; ++k) {
      std::vector<Rational> row(e);
      for (std::size_t j = 1; j <= e; ++j) row[j - 1] = Rational(c[k - j]);
      rows.push_back(std::move(row));
      rhs.emplace_back(-c[k]);
    }
    const auto sol = solve(std::move(rows), std::move(rhs), e);
    if (!sol) continue;
    std::vector<Integer> den{Integer(1)};
    bool integral = true;
    for (const Rational& x : *sol) {
      if (x.get_den() != 1) {
        integral = false;
        break;
      }
      den.push_back(x.get_num());
    }
    if (!integral) continue;
    std::vector<Integer> num(dmax + 1, Integer(0));
    for (std::size_t k = 0; k <= dmax; ++k) {
      for (std::size_t j = 0; j < den.size() && j <= k; ++j) num[k] += den[j] * c[k - j];
    }
    RationalFunction f{to_poly(num), to_poly(den)};
    if (!series_equal(expand(f, N), series.series())) continue;
    // cancel shared (1 - c t) factors
    auto [num_factors, num_rest] = linear_factors(f.num);
    for (const auto& [root, m] : num_factors) {
      for (std::size_t i = 0; i < m; ++i) {
        auto d = divide_linear(f.den, root);
        if (!d) break;
        f.den = std::move(*d);
        f.num = *divide_linear(f.num, root);
      }
    }
    return f;
  }
  throw ReconstructionError("no rational function with numerator and denominator degree <= " +
                            std::to_string(dmax) + " matches the series to precision " + std::to_string(N) +
                            "; raise dmax or the precision");
}

std::optional<std::string> factored_form(const RationalFunction& f) {
  const auto [den_factors, den_rest] = linear_factors(f.den);
  if (den_rest.degree() > 0) return std::nullopt;
  const auto [num_factors, num_rest] = linear_factors(f.num);
  std::string num;
  if (num_rest.degree() > 0) {
    num = num_factors.empty() ? "(" + compact(f.num) + ")" : render_factors(num_factors) + "(" + compact(num_rest) + ")";
  } else {
    num = num_factors.empty() ? "1" : render_factors(num_factors);
  }
  if (den_factors.empty()) return num;
  const bool single = den_factors.size() == 1 && den_factors.front().second == 1;
  const std::string den = render_factors(den_factors);
  return num + "/" + (single ? den : "(" + den + ")");
}

}  // namespace wittzeta
