#pragma once

#include <vector>

#include "garland/laplace.hpp"
#include "garland/rational.hpp"

namespace garland {

using DenseRationalMatrix = std::vector<std::vector<Rational>>;

/// Basis of {x : M x = 0}, one vector per free column of the RREF.
std::vector<std::vector<Rational>> nullspace(DenseRationalMatrix m);

/// Exact rank by sparse elimination over Q.
std::size_t exact_rank(const SparseRationalMatrix& m);

DenseRationalMatrix to_dense(const SparseRationalMatrix& m);

/// Coboundary d: C^i -> C^{i+1} as a sparse matrix (rows: (i+1)-simplices).
SparseRationalMatrix coboundary_matrix(const Complex& c, int i);

}  // namespace garland
