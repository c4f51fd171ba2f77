#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace garland::gf {

// Elements of GF(p^k) are also addressed by a dense index 0..q-1, the
// base-p number whose digits are the coefficients (low-to-high). Index order
// is the enumeration order: 0 first, then 1, ..., then x, x+1, ...
using ElementIndex = std::uint16_t;

class FieldElement;

/// GF(p^k) with an explicit monic irreducible modulus. Cheap to copy; the
/// arithmetic tables are shared.
class FieldSpec {
 public:
  /// Validates primality of p, monicity and irreducibility of the modulus.
  FieldSpec(int p, int k, std::vector<int> modulus);

  int characteristic() const { return tables_->p; }
  int degree() const { return tables_->k; }
  int order() const { return tables_->q; }
  /// Length k+1, low-to-high, last entry 1.
  const std::vector<int>& modulus() const { return tables_->modulus; }

  ElementIndex add(ElementIndex a, ElementIndex b) const { return tables_->add[a * tables_->q + b]; }
  ElementIndex sub(ElementIndex a, ElementIndex b) const { return add(a, tables_->neg[b]); }
  ElementIndex mul(ElementIndex a, ElementIndex b) const { return tables_->mul[a * tables_->q + b]; }
  ElementIndex neg(ElementIndex a) const { return tables_->neg[a]; }
  /// Throws DivisionByZero for 0.
  ElementIndex inv(ElementIndex a) const;

  FieldElement element(ElementIndex index) const;
  FieldElement zero() const;
  FieldElement one() const;

  bool operator==(const FieldSpec& other) const;

 private:
  struct Tables {
    int p = 0, k = 0, q = 0;
    std::vector<int> modulus;
    std::vector<ElementIndex> add, mul, neg, inv;
  };
  std::shared_ptr<const Tables> tables_;
};

class FieldElement {
 public:
  FieldElement(FieldSpec field, std::vector<int> coeffs);

  const FieldSpec& field() const { return field_; }
  /// Exactly k residues in [0, p), low-to-high.
  const std::vector<int>& coeffs() const { return coeffs_; }
  ElementIndex index() const;
  bool is_zero() const;

  bool operator==(const FieldElement& other) const;

 private:
  FieldSpec field_;
  std::vector<int> coeffs_;
};

bool is_prime(int n);

/// Trial division by every monic polynomial of degree 1..k/2 over Z_p.
bool is_irreducible(int p, const std::vector<int>& poly);

/// Lexicographically smallest monic irreducible modulus of degree k
/// (coefficients compared low-to-high). For k = 1 that is x.
FieldSpec make_field(int p, int k);

/// Field of order q = p^k; throws NonPrimeCharacteristic if q is not a prime power.
FieldSpec make_field_of_order(int q);

FieldElement field_add(const FieldElement& a, const FieldElement& b);
FieldElement field_sub(const FieldElement& a, const FieldElement& b);
FieldElement field_mul(const FieldElement& a, const FieldElement& b);
FieldElement field_neg(const FieldElement& a);
FieldElement field_inv(const FieldElement& a);

std::vector<FieldElement> enumerate_field(const FieldSpec& spec);

}  // namespace garland::gf
