#include <array>
#include <sstream>

#include "doctest.h"
#include "error_code.hpp"
#include "garland/building.hpp"
#include "garland/laplace.hpp"
#include "garland/linalg.hpp"
#include "garland/spectra.hpp"

using namespace garland;
using testing::thrown_code;

namespace {

Cochain cochain(int degree, std::vector<Rational> v) { return Cochain{degree, std::move(v)}; }

RatPolynomial minpoly_of(const Complex& c, int i) { return minimal_polynomial(assemble_matrix(c, i), c.count(i)); }

}  // namespace

TEST_CASE("coboundary and evaluation on an edge") {
  const auto c = Complex::from_maximal_simplices({{0, 1}});
  const auto f = cochain(0, {2, 5});
  const auto df = coboundary(c, f);
  REQUIRE(df.values.size() == 1);
  CHECK(df.values[0] == 3);
  const std::array<VertexId, 2> forward{0, 1}, backward{1, 0};
  CHECK(evaluate(c, df, forward) == 3);
  CHECK(evaluate(c, df, backward) == -3);

  const auto lf = laplacian_apply(c, f);
  CHECK(lf.values == std::vector<Rational>{-3, 3});
  const auto m = to_dense(*assemble_matrix(c, 0).matrix);
  CHECK(m == DenseRationalMatrix{{1, -1}, {-1, 1}});
}

TEST_CASE("path of two edges: weights enter the adjoint") {
  const auto c = Complex::from_maximal_simplices({{0, 1}, {1, 2}});
  const auto m = to_dense(*assemble_matrix(c, 0).matrix);
  const Rational h(1, 2);
  CHECK(m == DenseRationalMatrix{{1, -1, 0}, {-h, 1, -h}, {0, -1, 1}});
  CHECK(minpoly_of(c, 0) == RatPolynomial({0, 2, -3, 1}));
}

TEST_CASE("full simplex: spectrum {0, n+1}") {
  for (int n = 1; n <= 4; ++n) {
    const auto c = full_simplex(n);
    for (int i = 0; i < n; ++i) {
      CAPTURE(n);
      CAPTURE(i);
      // on C^0 the constants are the kernel; above it the kernel is the image of d
      CHECK(minpoly_of(c, i) == RatPolynomial({0, -(n + 1), 1}));
    }
  }
}

TEST_CASE("kernel dimension on C^0 counts components") {
  const auto c = Complex::from_maximal_simplices({{0, 1}, {1, 2}, {3, 4}, {5, 6}, {5, 7}});
  const auto kernel = nullspace(to_dense(*assemble_matrix(c, 0).matrix));
  CHECK(kernel.size() == 3);
  CHECK(reduced_cohomology_ranks(c) == std::vector<std::size_t>{2, 0});
}

TEST_CASE("reduced cohomology") {
  CHECK(reduced_cohomology_ranks(full_simplex(3)) == std::vector<std::size_t>{0, 0, 0, 0});
  const auto circle = Complex::from_maximal_simplices({{0, 1}, {1, 2}, {0, 2}});
  CHECK(reduced_cohomology_ranks(circle) == std::vector<std::size_t>{0, 1});
  // boundary of the tetrahedron
  const auto sphere = Complex::from_maximal_simplices({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(reduced_cohomology_ranks(sphere) == std::vector<std::size_t>{0, 0, 1});
  // the rank-one building over F_2 is a connected cubic graph on 14 vertices, 21 edges
  const auto b = flag_complex(1, gf::make_field(2, 1));
  CHECK(reduced_cohomology_ranks(b.complex) == std::vector<std::size_t>{0, 8});
}

TEST_CASE("rank-one building: normalized bipartite spectrum") {
  const auto b = flag_complex(1, gf::make_field(2, 1));
  const auto p = minpoly_of(b.complex, 0);
  CHECK(p == RatPolynomial({0, Rational(-14, 9), Rational(43, 9), -4, 1}));
}

TEST_CASE("matrix-free operator agrees with the assembled matrix") {
  const auto b = flag_complex(2, gf::make_field(2, 1));
  for (int i = 0; i <= 1; ++i) {
    const auto assembled = assemble_matrix(b.complex, i);
    const auto free_op = laplacian_operator(b.complex, i);
    CHECK(free_op.dim == assembled.dim);
    const auto mat = materialize(free_op);
    CHECK(mat.row_start == assembled.matrix->row_start);
    CHECK(mat.col == assembled.matrix->col);
    CHECK(mat.value == assembled.matrix->value);
    const auto scaled = scale_operator(assembled, 3);
    std::vector<Rational> e(assembled.dim);
    e[5] = 1;
    auto expected = assembled.apply(e);
    for (auto& x : expected) x *= 3;
    CHECK(scaled.apply(e) == expected);
    CHECK(scaled.matrix->apply(e) == expected);
  }
}

TEST_CASE("scaled integer form") {
  const auto c = Complex::from_maximal_simplices({{0, 1}, {1, 2}});
  const auto a = to_scaled_integer(*assemble_matrix(c, 0).matrix);
  CHECK(a.scale == 2);
  CHECK(a.value == std::vector<std::int64_t>{2, -2, -1, 2, -1, -2, 2});
  CHECK(a.row_norm() == 4);
}

TEST_CASE("matrix dump") {
  const auto c = Complex::from_maximal_simplices({{0, 1}, {1, 2}});
  std::ostringstream out;
  write_matrix_dump(out, *assemble_matrix(c, 0).matrix, 0);
  CHECK(out.str() ==
        "3 3 0\n"
        "0 0 1/1\n0 1 -1/1\n"
        "1 0 -1/2\n1 1 1/1\n1 2 -1/2\n"
        "2 1 -1/1\n2 2 1/1\n");
}

TEST_CASE("laplace errors") {
  const auto c = full_simplex(2);
  const auto f0 = Cochain::zero(c, 0), f1 = Cochain::zero(c, 1), f2 = Cochain::zero(c, 2);
  CHECK(thrown_code([&] { coboundary(c, f2); }) == ErrorCode::DegreeOutOfRange);
  CHECK(thrown_code([&] { adjoint_delta(c, f0); }) == ErrorCode::DegreeOutOfRange);
  CHECK(thrown_code([&] { laplacian_apply(c, f2); }) == ErrorCode::DegreeOutOfRange);
  CHECK(thrown_code([&] { assemble_matrix(c, 2); }) == ErrorCode::DegreeOutOfRange);
  CHECK(thrown_code([&] { inner_product(c, f0, f1); }) == ErrorCode::DegreeMismatch);
  CHECK(thrown_code([&] { rho_vertex(c, f1, 9); }) == ErrorCode::UnknownVertex);
  CHECK(thrown_code([&] { rho_type(c, {0, 1, 2}, f1, 3); }) == ErrorCode::UnknownType);
  const std::array<VertexId, 1> v{0};
  const auto lk = link(c, v);
  CHECK(thrown_code([&] { tau_vertex(c, f0, 0, lk); }) == ErrorCode::DegreeOutOfRange);
}

TEST_CASE("rho and tau on a triangle") {
  const auto c = full_simplex(2);
  const auto f = cochain(1, {1, 2, 3});  // [0,1], [0,2], [1,2]
  CHECK(rho_vertex(c, f, 0).values == std::vector<Rational>{1, 2, 0});
  CHECK(rho_vertex(c, f, 2).values == std::vector<Rational>{0, 2, 3});
  const std::array<VertexId, 1> v{1};
  const auto lk = link(c, v);  // vertices 0 and 2
  // tau_1 f on [0] is f([1,0]) = -f([0,1]); on [2] it is f([1,2])
  CHECK(tau_vertex(c, f, 1, lk).values == std::vector<Rational>{-1, 3});
  CHECK(rho_type(c, {0, 1, 2}, f, 1).values == rho_vertex(c, f, 1).values);
}
