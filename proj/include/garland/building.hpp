#pragma once

#include <cstdint>
#include <vector>

#include "garland/cochain.hpp"
#include "garland/complex.hpp"
#include "garland/gf.hpp"

namespace garland {

/// A linear subspace of F_q^n stored as its reduced row echelon basis.
struct Subspace {
  gf::FieldSpec field;
  int ambient = 0;
  int dim = 0;
  std::vector<gf::ElementIndex> rows;  // dim x ambient, row-major

  gf::ElementIndex at(int r, int c) const { return rows[r * ambient + c]; }
  std::vector<int> pivots() const;

  bool operator==(const Subspace& other) const {
    return ambient == other.ambient && dim == other.dim && rows == other.rows && field == other.field;
  }
};

/// All d-dimensional subspaces of F_q^n: pivot sets in lex order, then free
/// entries in lex order of field indices. Throws DimensionOutOfRange.
std::vector<Subspace> enumerate_subspaces(int n, int d, const gf::FieldSpec& field);

/// Number of d-dimensional subspaces of F_q^n, by the product formula.
std::uint64_t gaussian_binomial(int n, int d, std::uint64_t q);

/// a is contained in b (not necessarily properly).
bool contained_in(const Subspace& a, const Subspace& b);

/// Strict nesting in either direction. Throws AmbientMismatch.
bool incident(const Subspace& a, const Subspace& b);

/// Flag complex of the proper nonzero subspaces of F_q^(ell+2).
struct TypedBuilding {
  int ell = 0;
  int q = 0;
  Complex complex;
  /// types[vertex id] = dim(subspace) - 1. Vertex ids are dimension-major.
  std::vector<int> types;
  std::vector<Subspace> subspaces;
  /// Standard flag <e1> < <e1,e2> < ..., ascending ids (= increasing type).
  Simplex fundamental_chamber;

  int type_of(VertexId v) const { return types.at(v); }
  /// The fundamental chamber as a standalone full ell-simplex (same vertex ids).
  Complex chamber_complex() const;
};

/// Throws DimensionOutOfRange for ell < 1.
TypedBuilding flag_complex(int ell, const gf::FieldSpec& field);

/// Lift of a cochain on the fundamental chamber: the value on a simplex is
/// the value on the chamber face with the same type set, both ordered by
/// increasing type. Throws DimensionMismatch.
Cochain type_invariant_lift(const TypedBuilding& b, const Cochain& on_chamber);

/// First i-simplex of each type set, by index. GL acts transitively on the
/// simplices of one type, so these columns represent every orbit.
std::vector<std::size_t> type_representatives(const TypedBuilding& b, int i);

}  // namespace garland
