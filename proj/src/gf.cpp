#include "garland/gf.hpp"

#include <string>

#include "garland/error.hpp"

namespace garland::gf {

namespace {

using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic b, coefficients mod p.
Poly poly_mod(Poly a, const Poly& b, int p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly digits(int index, int p, int k) {
  Poly c(k);
  for (int i = 0; i < k; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const Poly& c, int p) {
  int index = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) index = index * p + *it;
  return index;
}

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "operands from different fields");
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(int p, const std::vector<int>& poly) {
  Poly f = poly;
  trim(f);
  const int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  for (int d = 1; d <= k / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int idx = 0; idx < count; ++idx) {
      Poly divisor = digits(idx, p, d);
      divisor.push_back(1);
      if (poly_mod(f, divisor, p).empty()) return false;
    }
  }
  return true;
}

FieldSpec::FieldSpec(int p, int k, std::vector<int> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidDegree, "degree must be >= 1");
  if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1) {
    throw Error(ErrorCode::InvalidDegree, "modulus must be monic of degree " + std::to_string(k));
  }
  for (int c : modulus) {
    if (c < 0 || c >= p) throw Error(ErrorCode::InvalidDegree, "modulus coefficient out of range");
  }
  if (!is_irreducible(p, modulus)) throw Error(ErrorCode::InvalidDegree, "modulus is reducible");

  auto t = std::make_shared<Tables>();
  t->p = p;
  t->k = k;
  t->q = 1;
  for (int i = 0; i < k; ++i) t->q *= p;
  if (t->q > 65535) throw Error(ErrorCode::InvalidDegree, "field too large");
  t->modulus = std::move(modulus);
  const int q = t->q;
  t->add.resize(static_cast<std::size_t>(q) * q);
  t->mul.resize(static_cast<std::size_t>(q) * q);
  t->neg.resize(q);
  t->inv.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    const Poly ca = digits(a, p, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - ca[i]) % p;
    t->neg[a] = static_cast<ElementIndex>(undigits(na, p));
    for (int b = 0; b < q; ++b) {
      const Poly cb = digits(b, p, k);
      Poly sum(k);
      for (int i = 0; i < k; ++i) sum[i] = (ca[i] + cb[i]) % p;
      t->add[a * q + b] = static_cast<ElementIndex>(undigits(sum, p));
      Poly prod(2 * k - 1, 0);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
      }
      Poly r = poly_mod(prod, t->modulus, p);
      r.resize(k, 0);
      t->mul[a * q + b] = static_cast<ElementIndex>(undigits(r, p));
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (t->mul[a * q + b] == 1) {
        t->inv[a] = static_cast<ElementIndex>(b);
        break;
      }
    }
  }
  tables_ = std::move(t);
}

ElementIndex FieldSpec::inv(ElementIndex a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return tables_->inv[a];
}

FieldElement FieldSpec::element(ElementIndex index) const {
  return FieldElement(*this, digits(index, characteristic(), degree()));
}

FieldElement FieldSpec::zero() const { return element(0); }
FieldElement FieldSpec::one() const { return element(1); }

bool FieldSpec::operator==(const FieldSpec& other) const {
  return tables_ == other.tables_ ||
         (tables_->p == other.tables_->p && tables_->modulus == other.tables_->modulus);
}

FieldElement::FieldElement(FieldSpec field, std::vector<int> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_.degree()) {
    throw Error(ErrorCode::InvalidDegree, "element must have exactly k coefficients");
  }
  for (int c : coeffs_) {
    if (c < 0 || c >= field_.characteristic()) throw Error(ErrorCode::InvalidDegree, "coefficient out of range");
  }
}

ElementIndex FieldElement::index() const {
  return static_cast<ElementIndex>(undigits(coeffs_, field_.characteristic()));
}

bool FieldElement::is_zero() const {
  for (int c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool FieldElement::operator==(const FieldElement& other) const {
  return field_ == other.field_ && coeffs_ == other.coeffs_;
}

FieldSpec make_field(int p, int k) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorCode::InvalidDegree, "degree must be >= 1");
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  // Candidates in lexicographic order of (c0, c1, ..., c_{k-1}): c0 varies slowest.
  for (int rank = 0; rank < count; ++rank) {
    Poly low(k);
    int r = rank;
    for (int i = k - 1; i >= 0; --i) {
      low[i] = r % p;
      r /= p;
    }
    low.push_back(1);
    if (is_irreducible(p, low)) return FieldSpec(p, k, low);
  }
  throw Error(ErrorCode::InvalidDegree, "no irreducible polynomial found");
}

FieldSpec make_field_of_order(int q) {
  if (q < 2) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(q) + " is not a prime power");
  return make_field(p, k);
}

FieldElement field_add(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return a.field().element(a.field().add(a.index(), b.index()));
}

FieldElement field_sub(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return a.field().element(a.field().sub(a.index(), b.index()));
}

FieldElement field_mul(const FieldElement& a, const FieldElement& b) {
  check_same_field(a, b);
  return a.field().element(a.field().mul(a.index(), b.index()));
}

FieldElement field_neg(const FieldElement& a) { return a.field().element(a.field().neg(a.index())); }

FieldElement field_inv(const FieldElement& a) { return a.field().element(a.field().inv(a.index())); }

std::vector<FieldElement> enumerate_field(const FieldSpec& spec) {
  std::vector<FieldElement> out;
  out.reserve(spec.order());
  for (int i = 0; i < spec.order(); ++i) out.push_back(spec.element(static_cast<ElementIndex>(i)));
  return out;
}

}  // namespace garland::gf
