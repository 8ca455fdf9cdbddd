#include "wittzeta/json_io.hpp"

namespace wittzeta::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InputError(std::string("missing field '") + name + "'");
  return j[name];
}

std::uint64_t u64_field(const Json& j, const char* name) { return to_u64(integer_from_json(field(j, name)), name); }

Json integers_to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const Integer& x : xs) out.push_back(integer_to_json(x));
  return out;
}

std::vector<Integer> integers_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Integer> out;
  out.reserve(j.size());
  for (const Json& x : j) out.push_back(integer_from_json(x));
  return out;
}

std::vector<std::string> strings_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& x : j) {
    if (!x.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

IntPolynomial poly_from_json(const Json& j, const char* what) {
  auto coeffs = integers_from_json(j, what);
  if (coeffs.empty() || coeffs.front() != 1) throw InputError(std::string(what) + " must start with \"1\"");
  return IntPolynomial(std::move(coeffs));
}

Json poly_to_json(const IntPolynomial& f) { return integers_to_json(f.coeffs()); }

}  // namespace

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(static_cast<unsigned long>(j.get<std::uint64_t>()))
                                  : Integer(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw InputError("expected an integer, got " + j.dump());
}

Json integer_to_json(const Integer& x) { return to_string(x); }

Json ghost_to_json(const GhostVector<Integer>& g) { return integers_to_json(g.coords()); }

GhostVector<Integer> ghost_from_json(const Json& j) {
  auto coords = integers_from_json(j, "ghost vector");
  if (coords.empty()) throw InputError("ghost vector must be nonempty");
  return GhostVector<Integer>(std::move(coords));
}

Json rational_to_json(const RationalFunction& f) {
  return Json{{"num", poly_to_json(f.num)}, {"den", poly_to_json(f.den)}};
}

RationalFunction rational_from_json(const Json& j) {
  return RationalFunction{poly_from_json(field(j, "num"), "num"), poly_from_json(field(j, "den"), "den")};
}

Json spec_to_json(const VarietySpec& spec) {
  return std::visit(
      Overloaded{
          [](const AffineSpec& s) { return Json{{"type", "affine"}, {"dim", s.dim}, {"q", integer_to_json(s.q)}}; },
          [](const ProjectiveSpec& s) {
            return Json{{"type", "projective"}, {"dim", s.dim}, {"q", integer_to_json(s.q)}};
          },
          [](const EllipticSpec& s) {
            return Json{{"type", "elliptic"}, {"p", s.p}, {"a", integer_to_json(s.a)}, {"b", integer_to_json(s.b)}};
          },
          [](const ProductSpec& s) {
            Json factors = Json::array();
            for (const VarietySpec& f : s.factors) factors.push_back(spec_to_json(f));
            return Json{{"type", "product"}, {"factors", std::move(factors)}};
          },
          [](const CountsSpec& s) {
            return Json{{"type", "counts"}, {"q", integer_to_json(s.q)}, {"counts", integers_to_json(s.counts)}};
          },
          [](const EquationsSpec& s) {
            return Json{{"type", "equations"}, {"p", s.p}, {"vars", s.vars}, {"polys", s.polys}};
          },
      },
      spec.kind);
}

VarietySpec spec_from_json(const Json& j) {
  const Json& type_field = field(j, "type");
  if (!type_field.is_string()) throw InputError("spec 'type' must be a string");
  const std::string type = type_field.get<std::string>();
  VarietySpec spec;
  if (type == "affine") {
    spec.kind = AffineSpec{u64_field(j, "dim"), integer_from_json(field(j, "q"))};
  } else if (type == "projective") {
    spec.kind = ProjectiveSpec{u64_field(j, "dim"), integer_from_json(field(j, "q"))};
  } else if (type == "elliptic") {
    spec.kind = EllipticSpec{u64_field(j, "p"), integer_from_json(field(j, "a")), integer_from_json(field(j, "b"))};
  } else if (type == "product") {
    const Json& factors = field(j, "factors");
    if (!factors.is_array()) throw InputError("product 'factors' must be an array");
    ProductSpec product;
    for (const Json& f : factors) product.factors.push_back(spec_from_json(f));
    spec.kind = std::move(product);
  } else if (type == "counts") {
    spec.kind = CountsSpec{integer_from_json(field(j, "q")), integers_from_json(field(j, "counts"), "counts")};
  } else if (type == "equations") {
    spec.kind = EquationsSpec{u64_field(j, "p"), strings_from_json(field(j, "vars"), "vars"),
                              strings_from_json(field(j, "polys"), "polys")};
  } else {
    throw InputError("unknown spec type '" + type + "'");
  }
  validate(spec);
  return spec;
}

Json counts_to_json(const PointCounts& c) {
  return Json{{"q", integer_to_json(c.q)}, {"counts", integers_to_json(c.counts)}};
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace wittzeta::io
