#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wittzeta/finite_field.hpp"
#include "wittzeta/integer.hpp"
#include "wittzeta/variety.hpp"

namespace wittzeta {

// Points of an Equations or Elliptic spec over F_{p^k}. Affine points are
// tuples of element indices in `field`; `points_at_infinity` counts the
// rational points off the affine chart (1 for an elliptic curve, 0 otherwise).
struct EnumeratedPoints {
  FiniteField field;
  std::vector<std::vector<std::uint64_t>> affine;
  std::size_t points_at_infinity = 0;
};

EnumeratedPoints enumerate_points(const VarietySpec& spec, unsigned k, const CountingOptions& options = {});

// closed[d-1] = number of closed points of degree d on X over F_{p^r}, for
// d = 1..n. Each X(F_{p^{rd}}) is split into orbits of x -> x^{p^r}; orbits of
// exact size d are the degree-d closed points.
std::vector<Integer> closed_point_counts(const VarietySpec& spec, std::size_t n, std::size_t r,
                                         const CountingOptions& options = {});

// #(Sym^n X)(F_{p^r}) as the number of multisets of closed points of X over
// F_{p^r} with total degree n. Independent of the Newton relation.
Integer brute_sym_count(const VarietySpec& spec, std::size_t n, std::size_t r, const CountingOptions& options = {});

}  // namespace wittzeta
