#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garland/rational.hpp"

namespace garland {

/// Dense univariate polynomial over Q, coefficients low-to-high, no trailing zeros.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<Rational> coeffs);

  static RatPolynomial constant(const Rational& c);
  /// x - root
  static RatPolynomial linear(const Rational& root);
  static RatPolynomial monomial(int degree, const Rational& c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  RatPolynomial monic() const;
  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(eval(x)); }
  RatPolynomial derivative() const;
  /// p(a x): coefficient k scaled by a^k.
  RatPolynomial compose_scale(const Rational& a) const;

  RatPolynomial operator+(const RatPolynomial& o) const;
  RatPolynomial operator-(const RatPolynomial& o) const;
  RatPolynomial operator*(const RatPolynomial& o) const;
  RatPolynomial operator*(const Rational& c) const;
  RatPolynomial operator-() const;
  bool operator==(const RatPolynomial& o) const = default;

  /// "c0/d0 c1/d1 ..." low-to-high; the zero polynomial is "0/1".
  std::string to_exact_string() const;
  static RatPolynomial parse(std::string_view text);
  /// Human-readable, highest degree first.
  std::string pretty() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b);
/// Monic gcd (zero if both are zero).
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
/// Monic lcm.
RatPolynomial lcm(const RatPolynomial& a, const RatPolynomial& b);
/// Monic p / gcd(p, p').
RatPolynomial squarefree_part(const RatPolynomial& p);
/// gcd(p, p') is constant.
bool squarefree_certify(const RatPolynomial& p);
/// Product of the given factors.
RatPolynomial expand(const std::vector<RatPolynomial>& factors);

}  // namespace garland
