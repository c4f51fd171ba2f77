#include <cmath>
#include <vector>

#include "doctest.h"
#include "garland/error.hpp"
#include "garland/gf.hpp"
#include "error_code.hpp"

using namespace garland;
using namespace garland::gf;

namespace {

// Lex-smallest monic irreducible of degree 2 or 3 (irreducible iff rootless),
// scanning (c0, c1, ...) with c0 slowest.
std::vector<int> brute_force_modulus(int p, int k) {
  const int total = static_cast<int>(std::pow(p, k));
  for (int code = 0; code < total; ++code) {
    std::vector<int> poly(k + 1, 0);
    int rest = code;
    for (int j = k - 1; j >= 0; --j) {
      poly[j] = rest % p;
      rest /= p;
    }
    poly[k] = 1;
    bool has_root = false;
    for (int x = 0; x < p && !has_root; ++x) {
      long v = 0;
      for (int j = k; j >= 0; --j) v = (v * x + poly[j]) % p;
      has_root = v == 0;
    }
    if (!has_root) return poly;
  }
  return {};
}

void check_axioms(const FieldSpec& f) {
  const int q = f.order();
  for (int a = 0; a < q; ++a) {
    REQUIRE(f.add(a, f.neg(a)) == 0);
    REQUIRE(f.mul(a, 1) == a);
    if (a != 0) {
      REQUIRE(f.mul(a, f.inv(a)) == 1);
      ElementIndex power = 1;
      for (int e = 0; e < q - 1; ++e) power = f.mul(power, a);
      REQUIRE(power == 1);
    }
    for (int b = 0; b < q; ++b) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      for (int c = 0; c < q; ++c) {
        REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("moduli are the lexicographically smallest irreducibles") {
  CHECK(make_field(2, 1).modulus() == std::vector<int>{0, 1});
  CHECK(make_field(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(make_field(3, 2).modulus() == std::vector<int>{1, 0, 1});
  for (int p : {2, 3, 5, 7}) {
    for (int k : {2, 3}) {
      CAPTURE(p);
      CAPTURE(k);
      CHECK(make_field(p, k).modulus() == brute_force_modulus(p, k));
    }
  }
  CHECK(make_field(3, 3).modulus() == make_field(3, 3).modulus());
}

TEST_CASE("arithmetic examples") {
  const auto f4 = make_field(2, 2);
  const FieldElement x(f4, {0, 1});
  CHECK(field_mul(x, x) == FieldElement(f4, {1, 1}));
  const auto f5 = make_field(5, 1);
  CHECK(field_inv(FieldElement(f5, {2})) == FieldElement(f5, {3}));
  for (const auto& a : enumerate_field(f4)) CHECK(field_add(a, field_neg(a)).is_zero());
  CHECK(field_sub(x, x).is_zero());
}

TEST_CASE("enumeration order") {
  const auto f2 = enumerate_field(make_field(2, 1));
  REQUIRE(f2.size() == 2);
  CHECK(f2[0].coeffs() == std::vector<int>{0});
  CHECK(f2[1].coeffs() == std::vector<int>{1});
  const auto f4 = enumerate_field(make_field(2, 2));
  REQUIRE(f4.size() == 4);
  CHECK(f4[0].coeffs() == std::vector<int>{0, 0});
  CHECK(f4[1].coeffs() == std::vector<int>{1, 0});
  CHECK(f4[2].coeffs() == std::vector<int>{0, 1});
  CHECK(f4[3].coeffs() == std::vector<int>{1, 1});
  CHECK(enumerate_field(make_field(3, 2)).size() == 9);
  for (std::size_t i = 0; i < f4.size(); ++i) CHECK(f4[i].index() == i);
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49}) {
    CAPTURE(q);
    check_axioms(make_field_of_order(q));
  }
}

TEST_CASE("errors") {
  using testing::thrown_code;
  CHECK(thrown_code([] { make_field(4, 1); }) == ErrorCode::NonPrimeCharacteristic);
  CHECK(thrown_code([] { make_field(2, 0); }) == ErrorCode::InvalidDegree);
  CHECK(thrown_code([] { make_field_of_order(6); }) == ErrorCode::NonPrimeCharacteristic);
  CHECK(thrown_code([] { make_field(5, 1).inv(0); }) == ErrorCode::DivisionByZero);
  CHECK(thrown_code([] { FieldSpec(2, 2, {1, 0, 1}); }) == ErrorCode::InvalidDegree);
  CHECK(thrown_code([] { field_add(make_field(2, 1).one(), make_field(3, 1).one()); }) == ErrorCode::FieldMismatch);
  CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
  CHECK(is_irreducible(2, {1, 1, 1}));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}
