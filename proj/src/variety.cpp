#include "wittzeta/variety.hpp"

#include <set>

#include "wittzeta/errors.hpp"

namespace wittzeta {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_prime_power(const Integer& q, const char* what) {
  if (!prime_power(q)) throw InputError(std::string(what) + ": q = " + to_string(q) + " is not a prime power");
}

Integer discriminant_part(const EllipticSpec& e) {
  // 4 a^3 + 27 b^2; the curve is singular iff this vanishes mod p.
  return 4 * e.a * e.a * e.a + 27 * e.b * e.b;
}

}  // namespace

void validate(const VarietySpec& spec) {
  std::visit(Overloaded{
                 [](const AffineSpec& s) { require_prime_power(s.q, "affine"); },
                 [](const ProjectiveSpec& s) { require_prime_power(s.q, "projective"); },
                 [](const EllipticSpec& s) {
                   const Integer p(static_cast<unsigned long>(s.p));
                   if (s.p <= 3 || !is_prime(p)) {
                     throw InputError("elliptic: p must be a prime > 3, got " + std::to_string(s.p));
                   }
                   Integer d = discriminant_part(s) % p;
                   if (d == 0) throw InputError("elliptic: curve is singular (4a^3 + 27b^2 = 0 mod p)");
                 },
                 [](const ProductSpec& s) {
                   if (s.factors.empty()) throw InputError("product: needs at least one factor");
                   for (const VarietySpec& f : s.factors) validate(f);
                   const Integer q = field_size(s.factors.front());
                   for (const VarietySpec& f : s.factors) {
                     if (field_size(f) != q) throw InputError("product: all factors must share the same q");
                   }
                 },
                 [](const CountsSpec& s) {
                   require_prime_power(s.q, "counts");
                   if (s.counts.empty()) throw InputError("counts: list must be nonempty");
                   for (const Integer& c : s.counts) {
                     if (c < 0) throw InputError("counts: point counts must be nonnegative");
                   }
                 },
                 [](const EquationsSpec& s) {
                   if (!is_prime(Integer(static_cast<unsigned long>(s.p)))) {
                     throw InputError("equations: p must be prime, got " + std::to_string(s.p));
                   }
                   if (s.vars.empty()) throw InputError("equations: need at least one variable");
                   std::set<std::string> seen(s.vars.begin(), s.vars.end());
                   if (seen.size() != s.vars.size()) throw InputError("equations: duplicate variable name");
                   parsed_equations(s);
                 },
             },
             spec.kind);
}

Integer field_size(const VarietySpec& spec) {
  return std::visit(Overloaded{
                        [](const AffineSpec& s) { return s.q; },
                        [](const ProjectiveSpec& s) { return s.q; },
                        [](const EllipticSpec& s) { return Integer(static_cast<unsigned long>(s.p)); },
                        [](const ProductSpec& s) {
                          if (s.factors.empty()) throw InputError("product: needs at least one factor");
                          return field_size(s.factors.front());
                        },
                        [](const CountsSpec& s) { return s.q; },
                        [](const EquationsSpec& s) { return Integer(static_cast<unsigned long>(s.p)); },
                    },
                    spec.kind);
}

std::vector<SparsePolynomial> parsed_equations(const EquationsSpec& spec) {
  std::vector<SparsePolynomial> out;
  out.reserve(spec.polys.size());
  for (const std::string& text : spec.polys) out.push_back(parse_polynomial(text, spec.vars));
  return out;
}

bool within_weil_bound(const Integer& q, std::size_t r, const Integer& count) {
  const Integer qr = ipow(q, r);
  const Integer error = qr + 1 - count;
  return error * error <= 4 * qr;
}

Integer count_elliptic_points(const EllipticSpec& spec, unsigned k, const CountingOptions& options) {
  const FiniteField field(spec.p, k);
  check_enumeration_budget(field, 1, options.enumeration_budget, "elliptic point enumeration");
  const std::uint64_t size = field.size();
  // squares[i] = number of y with y^2 = element(i)
  std::vector<std::uint8_t> squares(size, 0);
  for (std::uint64_t y = 0; y < size; ++y) {
    const auto e = field.element(y);
    ++squares[field.index(field.mul(e, e))];
  }
  const Integer P(static_cast<unsigned long>(spec.p));
  auto reduce = [&](const Integer& v) {
    Integer r = v % P;
    if (r < 0) r += P;
    return field.from_int(r.get_si());
  };
  const auto a = reduce(spec.a);
  const auto b = reduce(spec.b);
  std::uint64_t count = 1;  // point at infinity
  for (std::uint64_t xi = 0; xi < size; ++xi) {
    const auto x = field.element(xi);
    const auto rhs = field.add(field.mul(field.add(field.mul(x, x), a), x), b);
    count += squares[field.index(rhs)];
  }
  return Integer(static_cast<unsigned long>(count));
}

namespace {

// Counts from N_1 by the trace recursion over a base field of size q.
PointCounts trace_recursion_counts(const Integer& q, const Integer& n1, std::size_t range) {
  const Integer trace = q + 1 - n1;
  PointCounts out{q, {}};
  Integer s_prev = 2;       // s_0
  Integer s_cur = trace;    // s_1
  Integer qr = q;
  for (std::size_t r = 1; r <= range; ++r) {
    if (r > 1) {
      Integer s_next = trace * s_cur - q * s_prev;
      s_prev = s_cur;
      s_cur = s_next;
      qr *= q;
    }
    const Integer n = qr + 1 - s_cur;
    if (!within_weil_bound(q, r, n)) {
      throw InvariantError("elliptic count N_" + std::to_string(r) + " = " + to_string(n) +
                           " violates the Weil bound");
    }
    out.counts.push_back(n);
  }
  return out;
}

}  // namespace

PointCounts elliptic_counts_over_extension(const EllipticSpec& spec, std::size_t k, std::size_t range,
                                           const CountingOptions& options) {
  if (k == 0) throw InputError("extension degree must be positive");
  const Integer p(static_cast<unsigned long>(spec.p));
  const PointCounts base = trace_recursion_counts(p, count_elliptic_points(spec, 1, options), k);
  return trace_recursion_counts(ipow(p, k), base.at(k), range);
}

PointCounts point_counts(const VarietySpec& spec, std::size_t range, const CountingOptions& options) {
  validate(spec);
  return std::visit(
      Overloaded{
          [&](const AffineSpec& s) {
            PointCounts out{s.q, {}};
            for (std::size_t r = 1; r <= range; ++r) out.counts.push_back(ipow(s.q, s.dim * r));
            return out;
          },
          [&](const ProjectiveSpec& s) {
            PointCounts out{s.q, {}};
            for (std::size_t r = 1; r <= range; ++r) {
              const Integer qr = ipow(s.q, r);
              Integer n = 0;
              Integer term = 1;
              for (std::uint64_t i = 0; i <= s.dim; ++i) {
                n += term;
                term *= qr;
              }
              out.counts.push_back(n);
            }
            return out;
          },
          [&](const EllipticSpec& s) {
            return trace_recursion_counts(Integer(static_cast<unsigned long>(s.p)),
                                          count_elliptic_points(s, 1, options), range);
          },
          [&](const ProductSpec& s) {
            PointCounts out{field_size(spec), std::vector<Integer>(range, Integer(1))};
            for (const VarietySpec& f : s.factors) {
              const PointCounts c = point_counts(f, range, options);
              for (std::size_t r = 0; r < range; ++r) out.counts[r] *= c.counts[r];
            }
            return out;
          },
          [&](const CountsSpec& s) {
            if (s.counts.size() < range) {
              throw PrecisionError("counts spec is too short", range, s.counts.size());
            }
            return PointCounts{s.q, std::vector<Integer>(s.counts.begin(), s.counts.begin() + range)};
          },
          [&](const EquationsSpec& s) {
            const auto polys = parsed_equations(s);
            PointCounts out{Integer(static_cast<unsigned long>(s.p)), {}};
            for (std::size_t r = 1; r <= range; ++r) {
              const FiniteField field(s.p, static_cast<unsigned>(r));
              out.counts.push_back(count_affine_points(polys, s.vars.size(), field, options.enumeration_budget));
            }
            return out;
          },
      },
      spec.kind);
}

const std::vector<BuiltinSpec>& builtin_specs() {
  static const std::vector<BuiltinSpec> specs = [] {
    std::vector<BuiltinSpec> out;
    for (unsigned long q : {2ul, 5ul}) {
      const std::string f = "/F" + std::to_string(q);
      out.push_back({"A1" + f, VarietySpec{AffineSpec{1, Integer(q)}}});
      out.push_back({"P1" + f, VarietySpec{ProjectiveSpec{1, Integer(q)}}});
      out.push_back({"P2" + f, VarietySpec{ProjectiveSpec{2, Integer(q)}}});
    }
    const VarietySpec e{EllipticSpec{5, Integer(1), Integer(0)}};
    out.push_back({"E/F5", e});
    out.push_back({"ExE/F5", VarietySpec{ProductSpec{{e, e}}}});
    return out;
  }();
  return specs;
}

const VarietySpec& builtin_spec(const std::string& name) {
  for (const BuiltinSpec& b : builtin_specs()) {
    if (b.name == name) return b.spec;
  }
  throw InputError("unknown builtin spec '" + name + "'");
}

}  // namespace wittzeta
