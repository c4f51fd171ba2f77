#include <random>

#include "doctest.h"
#include "error_code.hpp"
#include "garland/building.hpp"
#include "garland/linalg.hpp"
#include "garland/spectra.hpp"

using namespace garland;
using testing::thrown_code;

namespace {

RatPolynomial P(std::vector<Rational> c) { return RatPolynomial(std::move(c)); }

SparseRationalMatrix sparse(const DenseRationalMatrix& d) {
  SparseRationalMatrix m;
  m.rows = d.size();
  m.cols = d.empty() ? 0 : d[0].size();
  m.row_start.push_back(0);
  for (const auto& row : d) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (sgn(row[c]) != 0) {
        m.col.push_back(static_cast<std::uint32_t>(c));
        m.value.push_back(row[c]);
      }
    }
    m.row_start.push_back(m.value.size());
  }
  return m;
}

LinearOperator op_of(const DenseRationalMatrix& d) {
  LinearOperator op;
  op.dim = d.size();
  op.matrix = sparse(d);
  op.apply = [m = *op.matrix](const std::vector<Rational>& x) { return m.apply(x); };
  return op;
}

// Minimal polynomial from the first linear dependence among vec(I), vec(M), vec(M^2), ...
RatPolynomial dense_minpoly_oracle(const DenseRationalMatrix& m) {
  const std::size_t n = m.size();
  auto mul = [&](const DenseRationalMatrix& a, const DenseRationalMatrix& b) {
    DenseRationalMatrix c(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a[i][k]) != 0)
          for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  DenseRationalMatrix power(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  std::vector<DenseRationalMatrix> powers{power};
  for (std::size_t d = 1; d <= n; ++d) {
    power = mul(power, m);
    powers.push_back(power);
    // columns = flattened powers 0..d
    DenseRationalMatrix system(n * n, std::vector<Rational>(d + 1));
    for (std::size_t k = 0; k <= d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) system[i * n + j][k] = powers[k][i][j];
    const auto kernel = nullspace(system);
    if (!kernel.empty()) return RatPolynomial(kernel[0]).monic();
  }
  return {};
}

DenseRationalMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> pick(-2, 2);
  DenseRationalMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = Rational(pick(rng), 2);
  // repeated eigenvalues
  if (n >= 4) {
    for (std::size_t j = 0; j < n; ++j) m[n - 1][j] = m[j][n - 1] = 0;
    m[n - 1][n - 1] = m[0][0];
  }
  return m;
}

}  // namespace

TEST_CASE("minimal polynomial of small matrices against the power-dependence oracle") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = random_symmetric(rng, n);
    CAPTURE(trial);
    CHECK(minimal_polynomial(op_of(m), n) == dense_minpoly_oracle(m));
  }
  CHECK(minimal_polynomial(op_of({{0, 0}, {0, 0}}), 2) == P({0, 1}));
  CHECK(minimal_polynomial(op_of({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}), 3) == P({6, -5, 1}));
}

TEST_CASE("minimal polynomial does not depend on the seed") {
  const auto b = flag_complex(2, gf::make_field(2, 1));
  const auto op = assemble_matrix(b.complex, 0);
  MinimalPolynomialInfo info;
  const auto p0 = minimal_polynomial(op, op.dim, {}, &info);
  CHECK(info.certified_columns == op.dim);
  CHECK(info.certification_primes >= 1);
  for (std::uint64_t seed : {1u, 99u, 12345u}) {
    MinimalPolynomialOptions o;
    o.seed = seed;
    CHECK(minimal_polynomial(op, op.dim, o) == p0);
  }
  CHECK(thrown_code([&] { minimal_polynomial(op, op.dim + 1); }) == ErrorCode::NotSquare);
}

TEST_CASE("certification rejects a proper divisor") {
  const auto c = Complex::from_maximal_simplices({{0, 1}, {1, 2}});
  const auto a = to_scaled_integer(*assemble_matrix(c, 0).matrix);
  // A = 2 M has eigenvalues 0, 2, 4
  const auto good = P({0, 8, -6, 1});
  CHECK_FALSE(find_unannihilated_column(a, good, {}).has_value());
  CHECK(find_unannihilated_column(a, P({0, 1}), {}).has_value());
  // the local minimal polynomial of e_0 is the whole thing; of the constant vector it is x
  CHECK(krylov_local_minimal_polynomial(a, {1, 0, 0}) == good);
  CHECK(krylov_local_minimal_polynomial(a, {1, 1, 1}) == P({0, 1}));
}

TEST_CASE("Sturm counting") {
  const auto p = expand({RatPolynomial::linear(0), RatPolynomial::linear(1), RatPolynomial::linear(3), P({-2, 0, 1})});
  CHECK(count_roots(p, -10, 10) == 5);
  CHECK(count_roots(p, 0, 1) == 1);    // (0, 1]
  CHECK(count_roots(p, -1, 0) == 1);
  CHECK(count_roots(p, 1, Rational(141, 100)) == 0);
  CHECK(count_roots(p, 1, Rational(142, 100)) == 1);
  CHECK(count_roots_above(p, 1) == 2);
  CHECK(count_roots_above(p, 3) == 0);
  CHECK(count_roots(P({5}), 0, 1) == 0);
}

TEST_CASE("root isolation") {
  const auto p = expand({RatPolynomial::linear(0), RatPolynomial::linear(Rational(16, 7)), P({-2, 0, 1}), P({1, 0, 1})});
  const Rational width(1, 1000000);
  const auto iso = isolate_real_roots(p, width);
  REQUIRE(iso.roots.size() == 4);
  CHECK_FALSE(iso.roots[0].is_rational);
  CHECK(iso.roots[1].is_zero);
  CHECK(iso.roots[1].is_rational);
  CHECK(iso.roots[2].is_rational == false);
  CHECK(iso.roots[3].is_rational);
  CHECK(iso.roots[3].value == Rational(16, 7));
  for (std::size_t k = 0; k < iso.roots.size(); ++k) {
    const auto& r = iso.roots[k];
    CHECK(r.hi - r.lo <= width);
    if (!r.is_rational) CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) < 0);
    if (k > 0) CHECK(iso.roots[k - 1].hi <= r.lo);
    // bisection endpoints are dyadic
    if (!r.is_rational) CHECK(mpz_popcount(r.lo.get_den_mpz_t()) == 1);
  }
  CHECK(to_double(iso.roots[2].midpoint()) == doctest::Approx(1.41421356).epsilon(1e-6));
  CHECK(isolate_real_roots(P({1, 0, 1}), width).roots.empty());
  CHECK(thrown_code([&] { isolate_real_roots(P({0, 0, 1}), width); }) == ErrorCode::NotSquarefree);
}

TEST_CASE("rational roots with large denominators are recognised") {
  for (const auto& v : {Rational(46, 21), Rational(67, 31), Rational(-5, 97), Rational(1000001, 999)}) {
    const auto p = RatPolynomial::linear(v) * P({-3, 0, 1});
    const auto iso = isolate_real_roots(p, Rational(1, 10));
    int rational = 0;
    for (const auto& r : iso.roots) {
      if (r.is_rational) {
        ++rational;
        CHECK(r.value == v);
        CHECK(r.lo < v);
        CHECK(v < r.hi);
      }
    }
    CHECK(rational == 1);
  }
}

TEST_CASE("refinement") {
  const auto p = P({-2, 0, 1});
  auto iso = isolate_real_roots(p, Rational(1, 2));
  auto root = iso.roots[1];
  refine_root(p, root, Rational(1, 1 << 20));
  CHECK(root.hi - root.lo <= Rational(1, 1 << 20));
  CHECK(root.lo * root.lo < 2);
  CHECK(root.hi * root.hi > 2);
}

TEST_CASE("simplest rational") {
  CHECK(simplest_rational_between(Rational(1, 3), Rational(1, 2)) == Rational(2, 5));
  CHECK(simplest_rational_between(Rational(-1, 2), Rational(1, 2)) == 0);
  CHECK(simplest_rational_between(Rational(3, 2), Rational(7, 2)) == 2);
  CHECK(simplest_rational_between(Rational(-7, 2), Rational(-3, 2)) == -2);
  CHECK(simplest_rational_between(Rational(457, 1000), Rational(458, 1000)) == Rational(16, 35));
  CHECK(thrown_code([] { simplest_rational_between(1, 1); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("extremes") {
  const auto p = expand({RatPolynomial::linear(0), P({-2, 0, 1}), RatPolynomial::linear(3)});
  const auto iso = isolate_real_roots(p, Rational(1, 1000));
  const auto ex = extract_extremes(p, iso);
  CHECK_FALSE(ex.minimal_nonzero.is_rational);
  CHECK(sgn(ex.minimal_nonzero.lo) >= 0);
  CHECK(to_double(ex.minimal_nonzero.midpoint()) == doctest::Approx(1.41421356).epsilon(1e-3));
  CHECK(ex.maximal.value == 3);
  const auto x = P({0, 1});
  CHECK(thrown_code([&] { extract_extremes(x, isolate_real_roots(x, 1)); }) == ErrorCode::NoNonzeroRoot);
  CHECK(is_eigenvalue(p, 3));
  CHECK_FALSE(is_eigenvalue(p, 2));
}

TEST_CASE("certified comparison") {
  const auto s2 = P({-2, 0, 1});
  const auto iso = isolate_real_roots(s2, Rational(1, 2));
  const auto root2 = affine(s2, iso.roots[1]);
  CHECK(certified_compare(root2, exact_value(Rational(141, 100)), Rational(1, 1000)) == Ordering::Greater);
  CHECK(certified_compare(exact_value(Rational(1415, 1000)), root2, Rational(1, 1000)) == Ordering::Greater);
  CHECK(certified_compare(exact_value(2), exact_value(2), 1) == Ordering::Equal);
  // 2 * sqrt2 - 1 vs sqrt 3
  const auto s3 = P({-3, 0, 1});
  const auto root3 = affine(s3, isolate_real_roots(s3, 1).roots[1]);
  CHECK(certified_compare(affine(s2, iso.roots[1], 2, -1), root3, Rational(1, 1000000)) == Ordering::Greater);
  // equal irrationals are never separated
  CHECK(certified_compare(root2, affine(s2, iso.roots[1]), Rational(1, 1000)) == Ordering::Unknown);
  // -sqrt2
  const auto [lo, hi] = enclosure(affine(s2, iso.roots[1], -1, 0));
  CHECK(lo < hi);
  CHECK(hi <= -1);
}
