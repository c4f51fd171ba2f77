#include "garland/spectra.hpp"

namespace garland {

namespace {

bool is_point(const AffineRoot& x) { return x.root.is_rational || sgn(x.scale) == 0; }

Rational point_of(const AffineRoot& x) { return sgn(x.scale) == 0 ? x.shift : Rational(x.scale * x.root.value + x.shift); }

// Side of the irrational root of x relative to the rational t in root units:
// -1 if root < t, +1 if root > t.
int side_of(const AffineRoot& x, const Rational& t) {
  if (t <= x.root.lo) return 1;
  if (t >= x.root.hi) return -1;
  // One root in (lo, hi), none of them rational: it lies below t iff p changes sign on (lo, t).
  return x.poly.sign_at(x.root.lo) != x.poly.sign_at(t) ? -1 : 1;
}

Ordering against_point(const AffineRoot& x, const Rational& c) {
  const Rational t = (c - x.shift) / x.scale;
  int s = side_of(x, t);
  if (sgn(x.scale) < 0) s = -s;
  return s < 0 ? Ordering::Less : Ordering::Greater;
}

Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return o;
}

}  // namespace

AffineRoot exact_value(const Rational& v) {
  IsolatedRoot r;
  r.lo = r.hi = r.value = v;
  r.is_rational = true;
  r.is_zero = sgn(v) == 0;
  return AffineRoot{RatPolynomial::linear(v), r, 1, 0};
}

AffineRoot affine(const RatPolynomial& p, const IsolatedRoot& r, const Rational& scale, const Rational& shift) {
  return AffineRoot{p, r, scale, shift};
}

std::pair<Rational, Rational> enclosure(const AffineRoot& x) {
  if (is_point(x)) {
    const Rational v = point_of(x);
    return {v, v};
  }
  Rational a = x.scale * x.root.lo + x.shift, b = x.scale * x.root.hi + x.shift;
  if (b < a) std::swap(a, b);
  return {a, b};
}

Ordering certified_compare(AffineRoot x, AffineRoot y, const Rational& floor) {
  if (is_point(x) && is_point(y)) {
    const int c = cmp(point_of(x), point_of(y));
    return c < 0 ? Ordering::Less : c > 0 ? Ordering::Greater : Ordering::Equal;
  }
  if (is_point(y)) return against_point(x, point_of(y));
  if (is_point(x)) return flip(against_point(y, point_of(x)));
  for (;;) {
    const auto [xl, xh] = enclosure(x);
    const auto [yl, yh] = enclosure(y);
    if (xh <= yl) return Ordering::Less;
    if (yh <= xl) return Ordering::Greater;
    const bool x_narrow = x.root.hi - x.root.lo < floor / abs(x.scale);
    const bool y_narrow = y.root.hi - y.root.lo < floor / abs(y.scale);
    if (x_narrow && y_narrow) return Ordering::Unknown;
    if (!x_narrow) refine_root(x.poly, x.root, (x.root.hi - x.root.lo) / 2);
    if (!y_narrow) refine_root(y.poly, y.root, (y.root.hi - y.root.lo) / 2);
    if (is_point(x) || is_point(y)) return certified_compare(std::move(x), std::move(y), floor);
  }
}

}  // namespace garland
