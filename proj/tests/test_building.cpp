#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "error_code.hpp"
#include "garland/building.hpp"
#include "garland/laplace.hpp"
#include "garland/spectra.hpp"
#include "identities.hpp"

using namespace garland;
using testing::thrown_code;

namespace {

// Number of distinct d-dimensional subspaces of F_q^n, found by spanning every
// d-tuple of vectors and keeping the spans of full dimension.
std::size_t brute_force_subspaces(int n, int d, const gf::FieldSpec& f) {
  const int q = f.order();
  int total = 1;
  for (int k = 0; k < n; ++k) total *= q;
  auto vec = [&](int code) {
    std::vector<gf::ElementIndex> v(n);
    for (int k = 0; k < n; ++k) {
      v[k] = code % q;
      code /= q;
    }
    return v;
  };
  auto encode = [&](const std::vector<gf::ElementIndex>& v) {
    int code = 0;
    for (int k = n - 1; k >= 0; --k) code = code * q + v[k];
    return code;
  };
  std::set<std::set<int>> spans;
  std::vector<int> pick(d, 0);
  for (;;) {
    std::set<int> span{0};
    for (int gen : pick) {
      std::set<int> next;
      for (int s : span) {
        for (int a = 0; a < q; ++a) {
          auto x = vec(s);
          const auto g = vec(gen);
          for (int k = 0; k < n; ++k) x[k] = f.add(x[k], f.mul(a, g[k]));
          next.insert(encode(x));
        }
      }
      span = next;
    }
    std::size_t expected = 1;
    for (int k = 0; k < d; ++k) expected *= q;
    if (span.size() == expected) spans.insert(span);
    int k = d - 1;
    while (k >= 0 && pick[k] == total - 1) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  return spans.size();
}

gf::FieldSpec f2() { return gf::make_field(2, 1); }

Subspace span_of(int n, std::vector<std::vector<int>> basis_rows) {
  // Find the enumerated subspace equal to the span of the given 0/1 rows over F_2.
  const int d = static_cast<int>(basis_rows.size());
  for (const auto& s : enumerate_subspaces(n, d, f2())) {
    Subspace probe{f2(), n, d, {}};
    bool all_in = true;
    for (const auto& row : basis_rows) {
      Subspace line{f2(), n, 1, std::vector<gf::ElementIndex>(row.begin(), row.end())};
      if (!contained_in(line, s)) all_in = false;
    }
    if (all_in) return s;
  }
  FAIL("span not found");
  return {f2(), n, d, {}};
}

}  // namespace

TEST_CASE("subspace counts match brute force and the Gaussian binomial") {
  CHECK(enumerate_subspaces(3, 1, f2()).size() == 7);
  CHECK(enumerate_subspaces(4, 2, f2()).size() == 35);
  CHECK(enumerate_subspaces(4, 0, f2()).size() == 1);
  CHECK(enumerate_subspaces(4, 4, f2()).size() == 1);
  for (int q : {2, 3, 4}) {
    const auto f = gf::make_field_of_order(q);
    for (int n = 1; n <= (q == 2 ? 4 : 3); ++n) {
      for (int d = 0; d <= n; ++d) {
        CAPTURE(q);
        CAPTURE(n);
        CAPTURE(d);
        const auto subs = enumerate_subspaces(n, d, f);
        CHECK(subs.size() == gaussian_binomial(n, d, q));
        CHECK(subs.size() == brute_force_subspaces(n, d, f));
      }
    }
  }
  CHECK(gaussian_binomial(5, 2, 7) == 140050);
  CHECK(thrown_code([] { enumerate_subspaces(3, 4, f2()); }) == ErrorCode::DimensionOutOfRange);
}

TEST_CASE("subspaces are canonical RREF and ordered by pivots") {
  const auto f = gf::make_field(3, 1);
  const auto subs = enumerate_subspaces(4, 2, f);
  std::vector<int> last_pivots;
  for (const auto& s : subs) {
    const auto piv = s.pivots();
    REQUIRE(piv.size() == 2);
    CHECK(piv[0] < piv[1]);
    for (int r = 0; r < 2; ++r) {
      CHECK(s.at(r, piv[r]) == 1);
      for (int other = 0; other < 2; ++other) {
        if (other != r) CHECK(s.at(other, piv[r]) == 0);
      }
      for (int col = 0; col < piv[r]; ++col) CHECK(s.at(r, col) == 0);
    }
    CHECK(last_pivots <= piv);
    last_pivots = piv;
  }
}

TEST_CASE("incidence") {
  const auto e1 = span_of(3, {{1, 0, 0}});
  const auto e12 = span_of(3, {{1, 0, 0}, {0, 1, 0}});
  const auto e23 = span_of(3, {{0, 1, 0}, {0, 0, 1}});
  const auto e2 = span_of(3, {{0, 1, 0}});
  CHECK(incident(e1, e12));
  CHECK(incident(e12, e1));
  CHECK_FALSE(incident(e1, e23));
  CHECK_FALSE(incident(e1, e2));
  CHECK_FALSE(incident(e1, e1));
  const auto other = span_of(4, {{1, 0, 0, 0}});
  CHECK(thrown_code([&] { incident(e1, other); }) == ErrorCode::AmbientMismatch);
}

TEST_CASE("rank-one building over F_2") {
  const auto b = flag_complex(1, f2());
  CHECK(b.complex.count(0) == 14);
  CHECK(b.complex.count(1) == 21);
  for (auto w : b.complex.weights(1)) CHECK(w == 1);
  for (std::size_t k = 0; k < 14; ++k) CHECK(b.complex.weight(0, k) == 3);
  CHECK(check_weight_identity(b.complex));
  int lines = 0;
  for (auto t : b.types) lines += t == 0;
  CHECK(lines == 7);
  // bipartite: every edge joins a line and a plane
  for (std::size_t k = 0; k < 21; ++k) {
    const auto e = b.complex.simplex(1, k);
    CHECK(b.types[e[0]] != b.types[e[1]]);
  }
}

TEST_CASE("rank-two building over F_2") {
  const auto b = flag_complex(2, f2());
  CHECK(b.complex.count(0) == 65);
  CHECK(b.complex.count(1) == 315);
  CHECK(b.complex.count(2) == 315);
  CHECK(check_weight_identity(b.complex));
  for (int i = 0; i <= 2; ++i) {
    for (std::size_t k = 0; k < b.complex.count(i); ++k) {
      std::set<int> types;
      for (auto v : b.complex.simplex(i, k)) types.insert(b.types[v]);
      CHECK(types.size() == static_cast<std::size_t>(i + 1));
    }
  }
  REQUIRE(b.fundamental_chamber.size() == 3);
  for (int t = 0; t < 3; ++t) {
    const auto& s = b.subspaces[b.fundamental_chamber[t]];
    CHECK(b.types[b.fundamental_chamber[t]] == t);
    CHECK(s.dim == t + 1);
    CHECK(s.pivots() == [&] {
      std::vector<int> p;
      for (int k = 0; k <= t; ++k) p.push_back(k);
      return p;
    }());
  }
  CHECK(b.complex.find(b.fundamental_chamber).has_value());
  CHECK(b.chamber_complex().maximal_simplices() == std::vector<Simplex>{b.fundamental_chamber});
}

TEST_CASE("vertex links of the rank-two building") {
  const auto b = flag_complex(2, f2());
  for (std::size_t k = 0; k < b.complex.vertex_count(); ++k) {
    const VertexId v = b.complex.vertex(k);
    const std::array<VertexId, 1> s{v};
    const auto lk = link(b.complex, s);
    CHECK(lk.complex.dimension() == 1);
    CHECK(check_weight_identity(lk.complex));
    if (b.types[v] == 1) {
      // lines in the plane times 3-spaces above it: K_{3,3}
      CHECK(lk.complex.count(0) == 6);
      CHECK(lk.complex.count(1) == 9);
    } else {
      // a projective plane of order 2
      CHECK(lk.complex.count(0) == 14);
      CHECK(lk.complex.count(1) == 21);
    }
  }
}

TEST_CASE("type-invariant lift") {
  const auto b1 = flag_complex(1, f2());
  const auto k1 = b1.chamber_complex();
  Cochain f = Cochain::zero(k1, 0);
  f.values = {1, -1};
  const auto lifted = type_invariant_lift(b1, f);
  for (std::size_t k = 0; k < lifted.values.size(); ++k) {
    CHECK(lifted.values[k] == (b1.types[b1.complex.vertex(k)] == 0 ? 1 : -1));
  }
  CHECK(laplacian_apply(b1.complex, lifted) == testing::scaled(lifted, 2));
  CHECK(type_invariant_lift(b1, Cochain::zero(k1, 0)) == Cochain::zero(b1.complex, 0));

  std::mt19937_64 rng(7);
  for (int q : {2, 3}) {
    const auto b = flag_complex(2, gf::make_field_of_order(q));
    const auto k = b.chamber_complex();
    for (int i = 0; i <= 1; ++i) {
      const auto g = testing::random_cochain(k, i, rng);
      CHECK(laplacian_apply(b.complex, type_invariant_lift(b, g)) == type_invariant_lift(b, laplacian_apply(k, g)));
    }
  }
  Cochain wrong = Cochain::zero(b1.complex, 0);
  CHECK(thrown_code([&] { type_invariant_lift(b1, wrong); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("annihilation is constant on type classes") {
  for (int q : {2, 3}) {
    const auto b = flag_complex(2, gf::make_field_of_order(q));
    for (int i = 0; i <= 1; ++i) {
      const auto reps = type_representatives(b, i);
      CHECK(reps.size() == 3);
      const auto a = to_scaled_integer(materialize(assemble_matrix(b.complex, i)));
      const auto p = minimal_polynomial(assemble_matrix(b.complex, i), b.complex.count(i))
                         .compose_scale(Rational(1) / Rational(a.scale))
                         .monic();
      CHECK_FALSE(find_unannihilated_column(a, p, reps));
      // drop one rational root: the failing columns are unions of type classes
      const auto roots = isolate_real_roots(p, Rational(1, 1000));
      bool some_divisor_fails = false;
      for (const auto& r : roots.roots) {
        if (!r.is_rational) continue;
        const auto divisor = divmod(p, RatPolynomial::linear(r.value)).first;
        std::map<std::vector<int>, bool> by_type;
        for (std::size_t s = 0; s < b.complex.count(i); ++s) {
          std::vector<int> ts;
          for (auto v : b.complex.simplex(i, s)) ts.push_back(b.types[v]);
          std::sort(ts.begin(), ts.end());
          const bool fails = find_unannihilated_column(a, divisor, {s}).has_value();
          some_divisor_fails = some_divisor_fails || fails;
          const auto [it, inserted] = by_type.emplace(ts, fails);
          CHECK(it->second == fails);
        }
      }
      CHECK(some_divisor_fails);
    }
  }
  CHECK(thrown_code([] { type_representatives(flag_complex(1, f2()), 2); }) == ErrorCode::DegreeOutOfRange);
}
