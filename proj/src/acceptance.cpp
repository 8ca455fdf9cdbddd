#include "wittzeta/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "wittzeta/enumeration.hpp"
#include "wittzeta/errors.hpp"
#include "wittzeta/lambda.hpp"
#include "wittzeta/rational.hpp"
#include "wittzeta/zeta.hpp"

namespace wittzeta::acceptance {

namespace {

using W = WittVector<Integer>;
using WP = WittVector<IntPolynomial>;
using WW = WittVector<WittVector<Integer>>;

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }

  Outcome outcome() const {
    std::ostringstream os;
    os << checks_ - failed_ << "/" << checks_ << " checks";
    for (const auto& f : failures_) os << "; FAILED " << f;
    return {failed_ == 0 && checks_ > 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

Integer rand_int(std::mt19937_64& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}

W random_w(std::mt19937_64& rng, std::size_t precision) {
  if (rng() % 2 == 0) {
    std::vector<Integer> tail;
    for (std::size_t i = 0; i < precision; ++i) tail.push_back(rand_int(rng, -3, 3));
    return W::from_tail(Integer(1), tail);
  }
  // +-[a] + +-[b]
  W out = W::zero(Integer(1), precision);
  for (int i = 0; i < 2; ++i) {
    W t = teichmuller(rand_int(rng, -4, 4), precision);
    out = rng() % 2 ? out + t : out - t;
  }
  return out;
}

WP random_wp(std::mt19937_64& rng, std::size_t precision) {
  std::vector<IntPolynomial> tail;
  for (std::size_t i = 0; i < precision; ++i) {
    tail.push_back(IntPolynomial(std::vector<Integer>{rand_int(rng, -2, 2), rand_int(rng, -2, 2), rand_int(rng, -2, 2)}));
  }
  return WP::from_tail(IntPolynomial(), tail);
}

WW random_ww(std::mt19937_64& rng, std::size_t outer, std::size_t inner) {
  std::vector<W> tail;
  for (std::size_t i = 0; i < outer; ++i) {
    std::vector<Integer> c;
    for (std::size_t j = 0; j < inner; ++j) c.push_back(rand_int(rng, -2, 2));
    tail.push_back(W::from_tail(Integer(1), c));
  }
  return WW::from_tail(W::zero(Integer(1), inner), tail);
}

template <class Witt>
void ring_axioms(Checker& ck, const Witt& p, const Witt& q, const Witt& r, const std::string& ring) {
  using A = std::decay_t<decltype(p.coeff(0))>;
  const Witt zero = Witt::zero(p.proto(), p.precision());
  const Witt one = teichmuller(ring::one_like(p.proto()), p.precision());
  ck.expect((p + q) + r == p + (q + r), ring + " additive associativity");
  ck.expect(p + q == q + p, ring + " additive commutativity");
  ck.expect((p * q) * r == p * (q * r), ring + " multiplicative associativity");
  ck.expect(p * q == q * p, ring + " multiplicative commutativity");
  ck.expect(p * (q + r) == p * q + p * r, ring + " distributivity");
  ck.expect(p * one == p, ring + " unit [1]");
  ck.expect(p + zero == p, ring + " zero");
  ck.expect(p + (-p) == zero, ring + " negation");
  ck.expect(ghost(p + q) == ghost(p) + ghost(q), ring + " ghost additive");
  ck.expect(ghost(p * q) == ghost(p) * ghost(q), ring + " ghost multiplicative");
  (void)sizeof(A);
}

Outcome witt_axioms() {
  Checker ck;
  std::mt19937_64 rng(20180111);
  for (int i = 0; i < 500; ++i) ring_axioms(ck, random_w(rng, 8), random_w(rng, 8), random_w(rng, 8), "W_8(Z)");
  for (int i = 0; i < 500; ++i) {
    ring_axioms(ck, random_ww(rng, 4, 4), random_ww(rng, 4, 4), random_ww(rng, 4, 4), "W_4(W_4(Z))");
  }
  return ck.outcome();
}

Outcome newton_round_trip() {
  Checker ck;
  std::mt19937_64 rng(1);
  for (int i = 0; i < 500; ++i) {
    const W p = random_w(rng, 8);
    ck.expect(ghost_inverse(ghost(p)) == p, "W_8(Z) round trip " + RingOps<W>::to_string(p));
  }
  for (int i = 0; i < 500; ++i) {
    const WP p = random_wp(rng, 8);
    ck.expect(ghost_inverse(ghost(p)) == p, "W_8(Z[z]) round trip");
  }
  for (int i = 0; i < 500; ++i) {
    const WW p = random_ww(rng, 4, 4);
    ck.expect(ghost_inverse(ghost(p)) == p, "W_4(W_4(Z)) round trip");
  }
  return ck.outcome();
}

Outcome affine_projective_symmetric_powers() {
  Checker ck;
  for (unsigned long q : {2ul, 3ul, 5ul}) {
    const VarietySpec line{ProjectiveSpec{1, Integer(q)}};
    const VarietySpec affine_line{AffineSpec{1, Integer(q)}};
    for (std::uint64_t n = 0; n <= 6; ++n) {
      const std::string tag = " q=" + std::to_string(q) + " n=" + std::to_string(n);
      const W lhs = sym_zeta(line, n, 12);
      const W rhs = zeta(VarietySpec{ProjectiveSpec{n, Integer(q)}}, 12);
      ck.expect(lhs.precision() == 12 && lhs == rhs, "Sym^n P^1 = P^n" + tag);
      const W affine = sym_zeta(affine_line, n, 12);
      ck.expect(affine == teichmuller(ipow(Integer(q), n), 12), "Sym^n A^1 = [q^n]" + tag);
    }
  }
  return ck.outcome();
}

Outcome sym2_p2() {
  Checker ck;
  for (unsigned long q : {2ul, 3ul}) {
    const Integer Q(q);
    const W z = sym_zeta(VarietySpec{ProjectiveSpec{2, Q}}, 2, 12);
    const RationalFunction f = rational_reconstruct(z, 6);
    IntPolynomial den = IntPolynomial::constant(1);
    for (unsigned e : {0u, 1u, 2u, 2u, 3u, 4u}) {
      const Integer root = ipow(Q, e);
      den = den * IntPolynomial(std::vector<Integer>{Integer(1), Integer(-root)});
    }
    ck.expect(f.num == IntPolynomial::constant(1), "numerator 1 at q=" + std::to_string(q));
    ck.expect(f.den == den, "denominator at q=" + std::to_string(q) + ": got " + f.den.to_string("t"));
    if (q == 2) ck.expect(ghost(z).coord(1) == 35, "first ghost coordinate 35 at q=2");
  }
  return ck.outcome();
}

Outcome generating_series_consistency() {
  Checker ck;
  for (const BuiltinSpec& b : builtin_specs()) {
    const WW series = zeta_generating_series(b.spec, 4, 3);
    for (std::size_t n = 0; n <= 4; ++n) {
      ck.expect(series.coeff(n) == sym_zeta(b.spec, n, 3) && series.coeff(n).precision() == 3,
                b.name + " u^" + std::to_string(n));
    }
  }
  return ck.outcome();
}

Outcome oracle_equality() {
  Checker ck;
  const VarietySpec curve{EllipticSpec{5, Integer(1), Integer(0)}};
  ck.expect(brute_sym_count(curve, 1, 1) == 4, "N_1(E) = 4 by enumeration");
  ck.expect(brute_sym_count(curve, 2, 1) == 24, "N_1(Sym^2 E) = 24 by enumeration");
  const VarietySpec equations{EquationsSpec{2, {"x", "y"}, {"y^2 + x*y + x^3 + 1"}}};
  for (const auto& [name, spec] : {std::pair{std::string("E/F5"), curve}, std::pair{std::string("eq/F2"), equations}}) {
    for (std::size_t n = 0; n <= 3; ++n) {
      const PointCounts counts = point_counts(spec, std::max<std::size_t>(n, 1) * 2);
      const PointCounts sym = sym_power_counts(counts, n, 2);
      for (std::size_t r = 1; r <= 2; ++r) {
        ck.expect(sym.at(r) == brute_sym_count(spec, n, r),
                  name + " n=" + std::to_string(n) + " r=" + std::to_string(r));
      }
    }
  }
  return ck.outcome();
}

// X over F_{q^r} built without subsampling counts of X over F_q.
PointCounts counts_over_extension(const VarietySpec& spec, std::size_t r, std::size_t range) {
  if (const auto* a = std::get_if<AffineSpec>(&spec.kind)) {
    return point_counts(VarietySpec{AffineSpec{a->dim, ipow(a->q, r)}}, range);
  }
  if (const auto* p = std::get_if<ProjectiveSpec>(&spec.kind)) {
    return point_counts(VarietySpec{ProjectiveSpec{p->dim, ipow(p->q, r)}}, range);
  }
  if (const auto* e = std::get_if<EllipticSpec>(&spec.kind)) return elliptic_counts_over_extension(*e, r, range);
  if (const auto* prod = std::get_if<ProductSpec>(&spec.kind)) {
    PointCounts out{ipow(field_size(spec), r), std::vector<Integer>(range, Integer(1))};
    for (const VarietySpec& f : prod->factors) {
      const PointCounts c = counts_over_extension(f, r, range);
      for (std::size_t m = 0; m < range; ++m) out.counts[m] *= c.counts[m];
    }
    return out;
  }
  throw InputError("no extension model for this spec");
}

Outcome multiplicativity_and_base_change() {
  Checker ck;
  constexpr std::size_t N = 8;
  const VarietySpec curve{EllipticSpec{5, Integer(1), Integer(0)}};
  const W ze = zeta(curve, N);
  ck.expect(zeta(VarietySpec{ProductSpec{{curve, curve}}}, N) == ze * ze, "Z(E x E) = Z(E) * Z(E)");
  const auto& specs = builtin_specs();
  for (const BuiltinSpec& x : specs) {
    for (const BuiltinSpec& y : specs) {
      if (field_size(x.spec) != field_size(y.spec)) continue;
      ck.expect(zeta(VarietySpec{ProductSpec{{x.spec, y.spec}}}, N) == zeta(x.spec, N) * zeta(y.spec, N),
                "Z(" + x.name + " x " + y.name + ")");
    }
  }
  for (const BuiltinSpec& x : specs) {
    const W z = zeta(x.spec, N);
    for (std::size_t r = 1; r <= 3; ++r) {
      const W lhs = frobenius(z, r);
      const W rhs = zeta_from_counts(counts_over_extension(x.spec, r, N / r), N / r);
      ck.expect(lhs.precision() == N / r && lhs == rhs, "F_" + std::to_string(r) + " Z(" + x.name + ")");
    }
  }
  // E over F_25 by direct enumeration of the curve over F_{25^m}.
  PointCounts enumerated{Integer(25), {}};
  for (unsigned m = 1; m <= N / 2; ++m) enumerated.counts.push_back(count_elliptic_points(std::get<EllipticSpec>(curve.kind), 2 * m));
  ck.expect(frobenius(ze, 2) == zeta_from_counts(enumerated, N / 2), "F_2 Z(E/F5) = Z(E/F25) by enumeration");
  return ck.outcome();
}

Outcome macdonald_measures() {
  Checker ck;
  std::mt19937_64 rng(7);
  constexpr std::size_t N = 6;
  for (int i = 0; i < 300; ++i) {
    BettiVector betti;
    const auto len = std::uniform_int_distribution<int>(1, 7)(rng);
    for (int k = 0; k < len; ++k) betti.b.push_back(rand_int(rng, 0, 5));
    const WP z = macdonald_poincare(betti, N);
    const GhostVector<IntPolynomial> g = ghost(z);
    const IntPolynomial poincare = poincare_polynomial(betti);
    for (std::size_t n = 1; n <= N; ++n) {
      IntPolynomial expected;
      for (std::size_t k = 0; k < betti.b.size(); ++k) {
        expected = expected + IntPolynomial::monomial(k % 2 ? Integer(-betti.b[k]) : betti.b[k], k * n);
      }
      ck.expect(g.coord(n) == expected, "gh_" + std::to_string(n) + " = P(z^n)");
    }
    ck.expect(specialize(z, 1) == sigma_int(euler_characteristic(betti), N), "z := 1 gives sigma_t(chi)");
  }
  return ck.outcome();
}

Outcome two_route_zeta() {
  Checker ck;
  for (const BuiltinSpec& b : builtin_specs()) {
    const PointCounts c = point_counts(b.spec, 8);
    ck.expect(zeta_from_counts(c, 8) == euler_product_zeta(c, 8), b.name);
  }
  return ck.outcome();
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "witt-ring-axioms", 30.0, witt_axioms},
      {2, "newton-round-trip", 0.0, newton_round_trip},
      {3, "affine-projective-symmetric-powers", 10.0, affine_projective_symmetric_powers},
      {4, "sym2-p2-reconstruction", 0.0, sym2_p2},
      {5, "generating-series-consistency", 10.0, generating_series_consistency},
      {6, "symmetric-power-oracle", 0.0, oracle_equality},
      {7, "multiplicativity-base-change", 0.0, multiplicativity_and_base_change},
      {8, "macdonald-poincare", 0.0, macdonald_measures},
      {9, "two-route-zeta", 0.0, two_route_zeta},
  };
  return all;
}

Result run(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    outcome = c.run();
  } catch (const std::exception& e) {
    outcome = {false, std::string("threw: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (c.time_limit_seconds > 0 && seconds >= c.time_limit_seconds) {
    outcome.passed = false;
    outcome.detail += "; exceeded time limit of " + std::to_string(c.time_limit_seconds) + " s";
  }
  return {c.id, c.name, outcome.passed, outcome.detail, seconds};
}

std::vector<const Criterion*> select(const std::string& suite) {
  std::vector<const Criterion*> out;
  for (const Criterion& c : criteria()) {
    if (suite == "all" || suite == c.name || suite == std::to_string(c.id)) out.push_back(&c);
  }
  if (out.empty()) throw InputError("unknown check suite '" + suite + "'");
  return out;
}

}  // namespace wittzeta::acceptance
