#pragma once

#include <optional>
#include <string>
#include <vector>

#include "garland/polynomial.hpp"

namespace garland::harness {

/// A minimal polynomial printed in the paper, kept in its factored form.
struct PaperPolynomial {
  std::vector<RatPolynomial> factors;
  std::string display;
  RatPolynomial expanded() const { return expand(factors); }
};

/// Published m^i_ell(q; x): ell = 1 for every q; ell = 2, i in {0, 1} for
/// q in {2, 3, 4, 5, 7}; ell = 3, i = 0 for q in {2, 3}; ell = 4, i = 0, q = 2.
std::optional<PaperPolynomial> paper_polynomial(int ell, int q, int i);

/// Minimal polynomial of (q+1) Delta on C^0 of the rank-one building:
/// x (x - (2q+2)) (x^2 - (2q+2) x + (q^2+q+1)).
PaperPolynomial paper_scaled_rank_one(int q);

struct PaperComparison {
  bool match = false;
  RatPolynomial expected;
  RatPolynomial computed;
  /// Lowest degree whose coefficients differ.
  std::optional<int> first_difference;
  std::string display;
};

/// Throws UnknownPaperInstance.
PaperComparison reproduce_paper_polynomial(const RatPolynomial& computed, int ell, int q, int i);

}  // namespace garland::harness
