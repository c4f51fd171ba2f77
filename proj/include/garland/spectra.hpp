#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "garland/complex.hpp"
#include "garland/laplace.hpp"
#include "garland/polynomial.hpp"
#include "garland/rational.hpp"

namespace garland {

struct MinimalPolynomialOptions {
  /// Krylov seed vectors are drawn from mt19937_64(seed + round); entries
  /// are (draw mod 7) - 3. The certified result does not depend on it.
  std::uint64_t seed = 0;
  /// Stop collecting seeds once the lcm is unchanged this many rounds in a row.
  int stable_rounds = 2;
  /// When set, certify p(A) e_j = 0 only for these basis indices. Valid only
  /// when every other e_j is the image of one of them under a symmetry of A.
  std::optional<std::vector<std::size_t>> certification_columns;
};

struct MinimalPolynomialInfo {
  int krylov_seeds = 0;
  int certification_primes = 0;
  std::size_t certified_columns = 0;
};

/// Exact monic minimal polynomial of a square operator. Throws NotSquare,
/// CertificationFailed.
RatPolynomial minimal_polynomial(const LinearOperator& op, std::size_t dim, const MinimalPolynomialOptions& options = {},
                                 MinimalPolynomialInfo* info = nullptr);

/// Minimal polynomial of v under the integer matrix A (not A / scale).
RatPolynomial krylov_local_minimal_polynomial(const ScaledIntegerMatrix& a, const std::vector<Integer>& v);

/// Checks p(A) e_j = 0 exactly for the integer matrix A and the given columns
/// (all when empty) by multi-modular evaluation with a proven magnitude bound.
/// Returns the first failing column, if any.
std::optional<std::size_t> find_unannihilated_column(const ScaledIntegerMatrix& a, const RatPolynomial& p,
                                                     const std::vector<std::size_t>& columns,
                                                     int* primes_used = nullptr);

/// Isolating interval of one real root. is_rational roots carry the exact
/// value; otherwise the root lies strictly inside (lo, hi).
struct IsolatedRoot {
  Rational lo, hi;
  bool is_zero = false;
  bool is_rational = false;
  Rational value;

  Rational midpoint() const { return is_rational ? value : Rational((lo + hi) / 2); }
};

struct RootIsolation {
  std::vector<IsolatedRoot> roots;  // sorted, pairwise disjoint
};

/// Number of distinct real roots in (a, b].
int count_roots(const RatPolynomial& p, const Rational& a, const Rational& b);
/// Number of distinct real roots in (a, +inf).
int count_roots_above(const RatPolynomial& p, const Rational& a);

/// Sturm-sequence isolation; every interval ends no wider than `width`.
/// Throws NotSquarefree.
RootIsolation isolate_real_roots(const RatPolynomial& p, const Rational& width);

/// Narrow an irrational root's interval to at most `width`.
void refine_root(const RatPolynomial& p, IsolatedRoot& root, const Rational& width);

/// Smallest-denominator rational strictly inside (lo, hi).
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

struct Extremes {
  IsolatedRoot minimal_nonzero;
  IsolatedRoot maximal;
};

/// Leftmost root certified positive, and the rightmost root. Throws NoNonzeroRoot.
Extremes extract_extremes(const RatPolynomial& p, const RootIsolation& r);

bool is_eigenvalue(const RatPolynomial& p, const Rational& c);

/// scale * root + shift, where root is a real root of poly.
struct AffineRoot {
  RatPolynomial poly;
  IsolatedRoot root;
  Rational scale = 1;
  Rational shift = 0;
};

AffineRoot exact_value(const Rational& v);
AffineRoot affine(const RatPolynomial& p, const IsolatedRoot& r, const Rational& scale = 1, const Rational& shift = 0);

enum class Ordering { Less, Equal, Greater, Unknown };

/// Exact when either side is rational; two irrational sides are refined until
/// their intervals separate or both are narrower than `floor` (Unknown).
Ordering certified_compare(AffineRoot x, AffineRoot y, const Rational& floor);

/// Current enclosure [lo, hi] of an AffineRoot (a point when exact).
std::pair<Rational, Rational> enclosure(const AffineRoot& x);

/// Ranks over Q of reduced cohomology H~^i, i = 0..n.
std::vector<std::size_t> reduced_cohomology_ranks(const Complex& c);

}  // namespace garland
