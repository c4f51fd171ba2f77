#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <vector>

#include "garland/cochain.hpp"
#include "garland/complex.hpp"
#include "garland/rational.hpp"

namespace garland {

/// (f, g) = sum over i-simplices of w(s) f(s) g(s). Throws DegreeMismatch.
Rational inner_product(const Complex& c, const Cochain& f, const Cochain& g);

/// d: C^i -> C^{i+1}. Throws DegreeOutOfRange unless 0 <= i < n.
Cochain coboundary(const Complex& c, const Cochain& f);

/// delta: C^i -> C^{i-1}, the weighted sum over vertices v with [v,s] a
/// simplex. Throws DegreeOutOfRange unless 1 <= i <= n.
Cochain adjoint_delta(const Complex& c, const Cochain& g);

/// Laplacian delta(d f). Throws DegreeOutOfRange unless 0 <= i <= n-1.
Cochain laplacian_apply(const Complex& c, const Cochain& f);

/// Restriction to simplices containing v. Throws UnknownVertex.
Cochain rho_vertex(const Complex& c, const Cochain& f, VertexId v);

/// Sum of rho_v over vertices of type alpha. Throws UnknownType.
Cochain rho_type(const Complex& c, const std::vector<int>& types, const Cochain& f, int alpha);

/// (tau_v f)(s) = f([v, s]) on the (i-1)-simplices of Lk(v). `lk` must be link(c, {v}).
/// Throws DegreeOutOfRange for i < 1.
Cochain tau_vertex(const Complex& c, const Cochain& f, VertexId v, const Link& lk);

struct SparseRationalMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::size_t> row_start;  // rows + 1
  std::vector<std::uint32_t> col;
  std::vector<Rational> value;

  std::vector<Rational> apply(const std::vector<Rational>& x) const;
  std::size_t nonzeros() const { return value.size(); }
};

/// A = scale * M with A integral; rows in CSR form.
struct ScaledIntegerMatrix {
  std::size_t dim = 0;
  Integer scale;
  std::vector<std::size_t> row_start;
  std::vector<std::uint32_t> col;
  std::vector<std::int64_t> value;

  /// Max absolute row sum of the integer matrix.
  Integer row_norm() const;
};

/// Throws NotSquare or BudgetExceeded (entries outside int64).
ScaledIntegerMatrix to_scaled_integer(const SparseRationalMatrix& m);

struct LinearOperator {
  int domain_degree = 0;
  int codomain_degree = 0;
  std::size_t dim = 0;
  std::function<std::vector<Rational>(const std::vector<Rational>&)> apply;
  std::optional<SparseRationalMatrix> matrix;
};

/// Materialized Laplacian on C^i in canonical simplex order, built from the
/// entry formula rather than from coboundary/adjoint_delta.
LinearOperator assemble_matrix(const Complex& c, int i);

/// Matrix-free Laplacian; keeps a reference to c.
LinearOperator laplacian_operator(const Complex& c, int i);

/// factor * op, materialized if op is.
LinearOperator scale_operator(const LinearOperator& op, const Rational& factor);

/// Materialize op by applying it to every basis vector.
SparseRationalMatrix materialize(const LinearOperator& op);

/// Header "rows cols degree", then one "row col num/den" line per nonzero.
void write_matrix_dump(std::ostream& out, const SparseRationalMatrix& m, int degree);

}  // namespace garland
