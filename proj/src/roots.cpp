#include <algorithm>

#include "garland/error.hpp"
#include "garland/spectra.hpp"

namespace garland {

namespace {

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  std::vector<RatPolynomial> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    auto rem = divmod(seq[seq.size() - 2], seq.back()).second;
    if (rem.is_zero()) break;
    seq.push_back(-rem);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int variations_at(const std::vector<RatPolynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& q : seq) signs.push_back(q.sign_at(x));
  return sign_changes(signs);
}

int variations_at_infinity(const std::vector<RatPolynomial>& seq, bool positive) {
  std::vector<int> signs;
  for (const auto& q : seq) {
    int s = sgn(q.leading());
    if (!positive && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

Integer floor_of(const Rational& x) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

// Simplest rational in the open interval (lo, hi) with 0 <= lo < hi; hi may be "infinite".
Rational simplest_nonnegative(const Rational& lo, const Rational* hi) {
  const Integer fl = floor_of(lo);
  const Rational candidate(fl + 1);
  if (hi == nullptr || candidate < *hi) return candidate;
  // (lo, hi) lies within [fl, fl + 1]
  const Rational a = lo - fl, b = *hi - fl;
  const Rational inv_b = 1 / b;
  if (sgn(a) == 0) return Rational(fl) + 1 / simplest_nonnegative(inv_b, nullptr);
  const Rational inv_a = 1 / a;
  return Rational(fl) + 1 / simplest_nonnegative(inv_b, &inv_a);
}

// Leading coefficient of the primitive integer multiple of p.
Integer primitive_leading(const RatPolynomial& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer content = 0;
  std::vector<Integer> ints;
  for (const auto& c : p.coeffs()) {
    ints.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  return abs(ints.back() / content);
}

struct Isolator {
  const RatPolynomial& p;
  std::vector<RatPolynomial> seq;

  int count(const Rational& a, const Rational& b) const { return variations_at(seq, a) - variations_at(seq, b); }

  // Exact rational root m: an open interval around it no wider than width and
  // containing no other root.
  IsolatedRoot around_exact(const Rational& m, Rational half, const Rational& width) const {
    while (2 * half > width) half /= 2;
    while (p.sign_at(m - half) == 0 || p.sign_at(m + half) == 0 || count(m - half, m + half) != 1) half /= 2;
    IsolatedRoot r;
    r.lo = m - half;
    r.hi = m + half;
    r.is_rational = true;
    r.value = m;
    r.is_zero = sgn(m) == 0;
    return r;
  }
};

}  // namespace

int count_roots(const RatPolynomial& p, const Rational& a, const Rational& b) {
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(p);
  return variations_at(seq, a) - variations_at(seq, b);
}

int count_roots_above(const RatPolynomial& p, const Rational& a) {
  if (p.degree() < 1) return 0;
  const auto seq = sturm_sequence(p);
  return variations_at(seq, a) - variations_at_infinity(seq, true);
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::DimensionOutOfRange, "empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
  if (sgn(lo) >= 0) return simplest_nonnegative(lo, &hi);
  const Rational nlo = -hi, nhi = -lo;
  return -simplest_nonnegative(nlo, &nhi);
}

void refine_root(const RatPolynomial& p, IsolatedRoot& root, const Rational& width) {
  if (root.is_rational) {
    if (root.hi - root.lo > width) {
      Isolator iso{p, sturm_sequence(p)};
      root = iso.around_exact(root.value, (root.hi - root.lo) / 2, width);
    }
    return;
  }
  const auto seq = sturm_sequence(p);
  while (root.hi - root.lo > width) {
    const Rational mid = (root.lo + root.hi) / 2;
    if (p.sign_at(mid) == 0) {
      Isolator iso{p, seq};
      root = iso.around_exact(mid, (root.hi - root.lo) / 4, width);
      return;
    }
    if (variations_at(seq, root.lo) - variations_at(seq, mid) == 1) {
      root.hi = mid;
    } else {
      root.lo = mid;
    }
  }
}

RootIsolation isolate_real_roots(const RatPolynomial& p, const Rational& width) {
  if (!squarefree_certify(p)) throw Error(ErrorCode::NotSquarefree, "polynomial has repeated factors");
  RootIsolation out;
  if (p.degree() < 1) return out;
  Isolator iso{p, sturm_sequence(p)};

  Rational bound = 0;
  for (int k = 0; k < p.degree(); ++k) bound = std::max(bound, Rational(abs(p.coeff(k) / p.leading())));
  Rational dyadic = 1;
  while (dyadic <= bound) dyadic *= 2;
  bound = dyadic;

  std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    const int n = iso.count(a, b);
    if (n == 0) continue;
    if (n == 1 && b - a <= width) {
      out.roots.push_back(IsolatedRoot{a, b, false, false, 0});
      continue;
    }
    const Rational m = (a + b) / 2;
    if (p.sign_at(m) == 0) {
      IsolatedRoot r = iso.around_exact(m, (b - a) / 4, width);
      stack.emplace_back(r.hi, b);
      stack.emplace_back(a, r.lo);
      out.roots.push_back(std::move(r));
    } else {
      stack.emplace_back(m, b);
      stack.emplace_back(a, m);
    }
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });

  // Any rational root a/b has b dividing the primitive leading coefficient D,
  // and two such rationals are at least 1/D^2 apart: once an interval is that
  // narrow its simplest rational is the only candidate.
  const Integer lead = primitive_leading(p);
  const Rational separation(Integer(1), lead * lead);
  for (auto& r : out.roots) {
    if (r.is_rational) continue;
    IsolatedRoot narrow = r;
    refine_root(p, narrow, separation / 2);
    if (narrow.is_rational) {
      r = iso.around_exact(narrow.value, (r.hi - r.lo) / 2, width);
      continue;
    }
    const Rational candidate = simplest_rational_between(narrow.lo, narrow.hi);
    if (p.sign_at(candidate) == 0) r = iso.around_exact(candidate, (r.hi - r.lo) / 2, width);
  }
  return out;
}

Extremes extract_extremes(const RatPolynomial& p, const RootIsolation& r) {
  std::optional<IsolatedRoot> smallest;
  for (const auto& root : r.roots) {
    if (root.is_zero) continue;
    if (root.is_rational) {
      if (sgn(root.value) > 0) {
        smallest = root;
        break;
      }
      continue;
    }
    if (sgn(root.hi) <= 0) continue;
    IsolatedRoot candidate = root;
    if (sgn(candidate.lo) < 0) {
      // p(0) != 0 here, so the root's side of 0 is decided by one Sturm count.
      if (count_roots(p, candidate.lo, 0) == 1) continue;
      candidate.lo = 0;
    }
    smallest = candidate;
    break;
  }
  if (!smallest || r.roots.empty()) throw Error(ErrorCode::NoNonzeroRoot, "no positive root");
  return Extremes{*smallest, r.roots.back()};
}

bool is_eigenvalue(const RatPolynomial& p, const Rational& c) { return p.sign_at(c) == 0; }

}  // namespace garland
