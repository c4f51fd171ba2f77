#include "garland/paper.hpp"

#include <algorithm>

#include "garland/error.hpp"

namespace garland::harness {

namespace {

using P = RatPolynomial;

Rational r(long n, long d = 1) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

P x() { return P::monomial(1); }
P lin(const Rational& root) { return P::linear(root); }
// x^2 + b x + c
P quad(const Rational& b, const Rational& c) { return P({c, b, 1}); }
// x^3 + a x^2 + b x + c
P cubic(const Rational& a, const Rational& b, const Rational& c) { return P({c, b, a, 1}); }
// x^4 + a x^3 + b x^2 + c x + d
P quartic(const Rational& a, const Rational& b, const Rational& c, const Rational& d) { return P({d, c, b, a, 1}); }

Rational frac(const Integer& n, const Integer& d) {
  Rational v(n, d);
  v.canonicalize();
  return v;
}

bool in(int q, std::initializer_list<int> qs) { return std::find(qs.begin(), qs.end(), q) != qs.end(); }

}  // namespace

std::optional<PaperPolynomial> paper_polynomial(int ell, int q, int i) {
  const Integer Q = q;
  const Integer q2 = Q * Q, p1 = q2 + Q + 1, s1 = (Q + 1) * (Q + 1);
  if (ell == 1 && i == 0 && q >= 2) {
    return PaperPolynomial{{x(), lin(2), quad(-2, frac(p1, s1))}, "x(x-2)(x^2-2x+(q^2+q+1)/(q^2+2q+1))"};
  }
  if (ell == 2 && i == 0 && in(q, {2, 3, 4, 5, 7})) {
    return PaperPolynomial{{x(), lin(2), lin(3), lin(frac(2 * q2 + 3 * Q + 2, p1)),
                            quad(-frac(4 * q2 + 3 * Q + 4, p1), frac(4 * q2 + 4, p1))},
                           "x(x-2)(x-3)(x-(2q^2+3q+2)/(q^2+q+1))(x^2-(4q^2+3q+4)/(q^2+q+1)x+(4q^2+4)/(q^2+q+1))"};
  }
  if (ell == 2 && i == 1 && in(q, {2, 3, 4, 5, 7})) {
    return PaperPolynomial{{x(), lin(1), lin(2), lin(3), quad(-2, frac(q2 + 1, s1)),
                            quad(-3, frac(2 * q2 + 2 * Q + 2, s1)), quad(-4, frac(4 * q2 + 6 * Q + 4, s1))},
                           "x(x-1)(x-2)(x-3)(x^2-2x+(q^2+1)/(q^2+2q+1))(x^2-3x+(2q^2+2q+2)/(q^2+2q+1))"
                           "(x^2-4x+(4q^2+6q+4)/(q^2+2q+1))"};
  }
  if (ell == 3 && i == 0 && q == 2) {
    return PaperPolynomial{
        {x(), lin(4), lin(r(23, 7)), lin(r(19, 7)),
         quartic(-12, r(581528, 11025), -r(220232, 2205), r(6734719, 99225))},
        "x(x-4)(x-23/7)(x-19/7)(x^4-12x^3+581528/11025x^2-220232/2205x+6734719/99225)"};
  }
  if (ell == 3 && i == 0 && q == 3) {
    return PaperPolynomial{
        {x(), lin(4), lin(r(42, 13)), lin(r(36, 13)),
         quartic(-12, r(14350977, 270400), -r(2760633, 27040), r(309843369, 4326400))},
        "x(x-4)(x-42/13)(x-36/13)(x^4-12x^3+14350977/270400x^2-2760633/27040x+309843369/4326400)"};
  }
  if (ell == 4 && i == 0 && q == 2) {
    return PaperPolynomial{{x(), lin(4), lin(5), lin(r(144, 35)), quad(-r(1322, 155), r(2798, 155)),
                            quad(-r(276, 35), r(536, 35)), cubic(-r(1778, 155), r(1306, 31), -r(7512, 155))},
                           "x(x-4)(x-5)(x-144/35)(x^2-1322/155x+2798/155)(x^2-276/35x+536/35)"
                           "(x^3-1778/155x^2+1306/31x-7512/155)"};
  }
  return std::nullopt;
}

PaperPolynomial paper_scaled_rank_one(int q) {
  const Integer Q = q;
  return PaperPolynomial{{x(), lin(Rational(2 * Q + 2)), quad(Rational(-(2 * Q + 2)), Rational(Q * Q + Q + 1))},
                         "x(x-(2q+2))(x^2-(2q+2)x+(q^2+q+1))"};
}

PaperComparison reproduce_paper_polynomial(const RatPolynomial& computed, int ell, int q, int i) {
  const auto paper = paper_polynomial(ell, q, i);
  if (!paper) {
    throw Error(ErrorCode::UnknownPaperInstance, "no published polynomial for ell=" + std::to_string(ell) +
                                                     " q=" + std::to_string(q) + " i=" + std::to_string(i));
  }
  PaperComparison out;
  out.expected = paper->expanded().monic();
  out.computed = computed.monic();
  out.display = paper->display;
  out.match = out.expected == out.computed;
  if (!out.match) {
    const int top = std::max(out.expected.degree(), out.computed.degree());
    for (int k = 0; k <= top; ++k) {
      if (out.expected.coeff(k) != out.computed.coeff(k)) {
        out.first_difference = k;
        break;
      }
    }
  }
  return out;
}

}  // namespace garland::harness
