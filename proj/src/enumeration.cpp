#include "wittzeta/enumeration.hpp"

#include <map>

#include "wittzeta/errors.hpp"

namespace wittzeta {

namespace {

EnumeratedPoints enumerate_elliptic(const EllipticSpec& spec, unsigned k, const CountingOptions& options) {
  EnumeratedPoints out{FiniteField(spec.p, k), {}, 1};
  const FiniteField& field = out.field;
  check_enumeration_budget(field, 1, options.enumeration_budget, "elliptic point enumeration");
  const std::uint64_t size = field.size();
  constexpr std::uint64_t kNoRoot = ~std::uint64_t{0};
  std::vector<std::uint64_t> root(size, kNoRoot);
  for (std::uint64_t y = 0; y < size; ++y) {
    const auto e = field.element(y);
    root[field.index(field.mul(e, e))] = y;
  }
  const Integer P(static_cast<unsigned long>(spec.p));
  auto reduce = [&](const Integer& v) {
    Integer r = v % P;
    if (r < 0) r += P;
    return field.from_int(r.get_si());
  };
  const auto a = reduce(spec.a);
  const auto b = reduce(spec.b);
  for (std::uint64_t xi = 0; xi < size; ++xi) {
    const auto x = field.element(xi);
    const auto rhs = field.add(field.mul(field.add(field.mul(x, x), a), x), b);
    const std::uint64_t y = root[field.index(rhs)];
    if (y == kNoRoot) continue;
    out.affine.push_back({xi, y});
    const std::uint64_t minus_y = field.index(field.neg(field.element(y)));
    if (minus_y != y) out.affine.push_back({xi, minus_y});
  }
  return out;
}

std::uint64_t characteristic(const VarietySpec& spec) {
  if (const auto* e = std::get_if<EllipticSpec>(&spec.kind)) return e->p;
  if (const auto* q = std::get_if<EquationsSpec>(&spec.kind)) return q->p;
  throw InputError("enumeration needs an elliptic or equations spec");
}

std::size_t coordinate_count(const VarietySpec& spec) {
  if (std::holds_alternative<EllipticSpec>(spec.kind)) return 1;  // y is solved for, not enumerated
  return std::get<EquationsSpec>(spec.kind).vars.size();
}

}  // namespace

EnumeratedPoints enumerate_points(const VarietySpec& spec, unsigned k, const CountingOptions& options) {
  validate(spec);
  if (const auto* e = std::get_if<EllipticSpec>(&spec.kind)) return enumerate_elliptic(*e, k, options);
  if (const auto* eq = std::get_if<EquationsSpec>(&spec.kind)) {
    FiniteField field(eq->p, k);
    auto points = affine_points(parsed_equations(*eq), eq->vars.size(), field, options.enumeration_budget);
    return EnumeratedPoints{std::move(field), std::move(points), 0};
  }
  throw InputError("enumeration needs an elliptic or equations spec");
}

std::vector<Integer> closed_point_counts(const VarietySpec& spec, std::size_t n, std::size_t r,
                                         const CountingOptions& options) {
  if (r == 0) throw InputError("extension degree r must be positive");
  validate(spec);
  if (n == 0) return {};
  {
    // Fail fast on the largest field before doing any work.
    const FiniteField largest(characteristic(spec), static_cast<unsigned>(r * n));
    check_enumeration_budget(largest, coordinate_count(spec), options.enumeration_budget,
                             "closed point enumeration");
  }
  const Integer p(static_cast<unsigned long>(characteristic(spec)));
  const Integer frob_exponent = ipow(p, r);
  std::vector<Integer> closed;
  for (std::size_t d = 1; d <= n; ++d) {
    const EnumeratedPoints pts = enumerate_points(spec, static_cast<unsigned>(r * d), options);
    const FiniteField& field = pts.field;
    std::map<std::uint64_t, std::uint64_t> frob;  // memoized x -> x^{p^r} on indices
    auto apply = [&](std::uint64_t x) {
      auto it = frob.find(x);
      if (it != frob.end()) return it->second;
      const std::uint64_t y = field.index(field.pow(field.element(x), frob_exponent));
      frob.emplace(x, y);
      return y;
    };
    std::uint64_t exact = d == 1 ? pts.points_at_infinity : 0;
    for (const auto& point : pts.affine) {
      std::vector<std::uint64_t> image = point;
      std::size_t orbit = 0;
      do {
        for (auto& c : image) c = apply(c);
        ++orbit;
      } while (image != point && orbit <= d);
      if (orbit > d || d % orbit != 0) {
        throw InvariantError("Frobenius orbit size does not divide the extension degree");
      }
      if (orbit == d) ++exact;
    }
    if (exact % d != 0) throw InvariantError("points of exact degree d do not split into orbits of size d");
    closed.emplace_back(static_cast<unsigned long>(exact / d));
  }
  return closed;
}

Integer brute_sym_count(const VarietySpec& spec, std::size_t n, std::size_t r, const CountingOptions& options) {
  if (n == 0) return 1;
  const std::vector<Integer> closed = closed_point_counts(spec, n, r, options);
  // ways[m] = multisets of closed points of degree <= d with total degree m
  std::vector<Integer> ways(n + 1, Integer(0));
  ways[0] = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    std::vector<Integer> next(n + 1, Integer(0));
    for (std::size_t m = 0; m <= n; ++m) {
      if (ways[m] == 0) continue;
      // choose j points of degree d with repetition
      for (std::size_t j = 0; m + j * d <= n; ++j) next[m + j * d] += ways[m] * multichoose(closed[d - 1], j);
    }
    ways = std::move(next);
  }
  return ways[n];
}

}  // namespace wittzeta
