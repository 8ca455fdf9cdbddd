#pragma once

#include <string>

#include <json.hpp>

#include "wittzeta/integer.hpp"
#include "wittzeta/rational.hpp"
#include "wittzeta/variety.hpp"
#include "wittzeta/witt.hpp"

// JSON documents used by the command-line tool.
//
//   Witt vector     {"precision": N, "coeffs": ["a1", ..., "aN"]}
//                   integers are decimal strings; the constant term 1 is
//                   implicit; nested Witt vectors nest the same object.
//   ghost vector    ["b1", ..., "bN"]
//   rational fn     {"num": ["1", ...], "den": ["1", ...]} ascending in t
//   variety spec    {"type": "affine" | "projective", "dim": m, "q": q}
//                   {"type": "elliptic", "p": p, "a": a, "b": b}
//                   {"type": "product", "factors": [spec, ...]}
//                   {"type": "counts", "q": q, "counts": [N1, ...]}
//                   {"type": "equations", "p": p, "vars": [...], "polys": [...]}
//
// Readers accept integers either as JSON numbers or as decimal strings and
// throw InputError on anything malformed.
namespace wittzeta::io {

using Json = nlohmann::json;

Integer integer_from_json(const Json& j);
Json integer_to_json(const Integer& x);

template <class A>
struct WittCodec;

template <>
struct WittCodec<Integer> {
  static Json encode(const Integer& x) { return integer_to_json(x); }
  static Integer decode(const Json& j) { return integer_from_json(j); }
};

template <GhostCapableRing A>
struct WittCodec<WittVector<A>> {
  static Json encode(const WittVector<A>& w) {
    Json coeffs = Json::array();
    for (std::size_t n = 1; n <= w.precision(); ++n) coeffs.push_back(WittCodec<A>::encode(w.coeff(n)));
    return Json{{"precision", w.precision()}, {"coeffs", std::move(coeffs)}};
  }

  static WittVector<A> decode(const Json& j) {
    if (!j.is_object() || !j.contains("precision") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
      throw InputError("Witt vector must be an object with 'precision' and 'coeffs'");
    }
    const Integer precision = integer_from_json(j["precision"]);
    const Json& coeffs = j["coeffs"];
    if (precision < 1 || precision != static_cast<unsigned long>(coeffs.size())) {
      throw InputError("Witt vector 'precision' must be positive and equal the number of coefficients");
    }
    std::vector<A> tail;
    tail.reserve(coeffs.size());
    for (const Json& c : coeffs) tail.push_back(WittCodec<A>::decode(c));
    return WittVector<A>::from_tail(tail.front(), tail);
  }
};

template <GhostCapableRing A>
Json witt_to_json(const WittVector<A>& w) { return WittCodec<WittVector<A>>::encode(w); }

template <class W>
W witt_from_json(const Json& j) { return WittCodec<W>::decode(j); }

Json ghost_to_json(const GhostVector<Integer>& g);
GhostVector<Integer> ghost_from_json(const Json& j);

Json rational_to_json(const RationalFunction& f);
RationalFunction rational_from_json(const Json& j);

Json spec_to_json(const VarietySpec& spec);
// Validates the spec after reading it.
VarietySpec spec_from_json(const Json& j);

Json counts_to_json(const PointCounts& c);

// Parses JSON text, mapping syntax errors to InputError.
Json parse(const std::string& text);

}  // namespace wittzeta::io
