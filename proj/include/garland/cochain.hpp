#pragma once

#include <vector>

#include "garland/complex.hpp"
#include "garland/rational.hpp"

namespace garland {

/// Alternating function on oriented i-simplices, stored on canonical
/// (ascending) representatives in the complex's index order.
struct Cochain {
  int degree = 0;
  std::vector<Rational> values;

  static Cochain zero(const Complex& c, int degree) { return Cochain{degree, std::vector<Rational>(c.count(degree))}; }

  bool operator==(const Cochain& other) const = default;
};

/// Value on an arbitrary ordering of a simplex: sign times the stored value.
Rational evaluate(const Complex& c, const Cochain& f, std::span<const VertexId> oriented);

}  // namespace garland
