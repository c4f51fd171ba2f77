#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace garland {

using VertexId = std::uint32_t;

/// Canonical representative of a simplex: strictly ascending vertex ids.
using Simplex = std::vector<VertexId>;

/// Canonical representative and the parity of the sorting permutation.
/// Throws RepeatedVertex on duplicate entries.
std::pair<Simplex, int> orientation_sign(std::span<const VertexId> oriented);

/// A finite pure simplicial complex in which every simplex is a face of a
/// top-dimensional one. Simplices of each dimension are indexed densely in
/// lexicographic order; w(s) counts the top simplices containing s.
class Complex {
 public:
  /// Closure of the given top simplices. Throws EmptyInput, MixedDimensions,
  /// DuplicateSimplex, RepeatedVertex.
  static Complex from_maximal_simplices(std::vector<std::vector<VertexId>> faces);

  int dimension() const { return n_; }
  std::size_t count(int i) const;
  std::size_t vertex_count() const { return count(0); }

  std::span<const VertexId> simplex(int i, std::size_t index) const;
  Simplex simplex_copy(int i, std::size_t index) const;
  std::optional<std::size_t> find(std::span<const VertexId> canonical) const;
  /// Throws SimplexNotFound.
  std::size_t index_of(std::span<const VertexId> canonical) const;
  VertexId vertex(std::size_t index) const { return verts_[0][index]; }
  /// Throws UnknownVertex.
  std::size_t vertex_index(VertexId v) const;

  std::uint64_t weight(int i, std::size_t index) const { return weights_[i][index]; }
  const std::vector<std::uint64_t>& weights(int i) const { return weights_[i]; }

  /// For i >= 1: the i+1 faces of an i-simplex; entry j omits vertex j.
  std::span<const std::uint32_t> faces(int i, std::size_t index) const;
  /// For i < n: indices of the (i+1)-simplices containing the i-simplex.
  std::span<const std::uint32_t> cofaces(int i, std::size_t index) const;

  /// Indices of the top simplices containing s (canonical).
  std::vector<std::uint32_t> top_simplices_containing(std::span<const VertexId> s) const;
  std::vector<Simplex> maximal_simplices() const;

 private:
  int n_ = 0;
  std::vector<std::vector<VertexId>> verts_;  // per dimension, flat, stride i+1
  std::vector<std::vector<std::uint64_t>> weights_;
  std::vector<std::vector<std::uint32_t>> faces_;  // per dimension >= 1, stride i+1
  std::vector<std::vector<std::uint32_t>> coface_offsets_;
  std::vector<std::vector<std::uint32_t>> cofaces_;
};

struct Link {
  Complex complex;
  /// to_parent[local id] = id in the parent complex; ascending.
  std::vector<VertexId> to_parent;
};

/// Link of s as a standalone complex of dimension n - dim(s) - 1, vertices
/// renumbered densely in ascending order of their parent ids. Throws
/// SimplexNotFound, or DimensionOutOfRange when s is a top simplex.
Link link(const Complex& c, std::span<const VertexId> s);

/// Closure of all simplices containing s, with the parent's vertex ids.
Complex star(const Complex& c, std::span<const VertexId> s);

/// sum over cofaces s of sigma of w(s) == (n - i) * w(sigma), for all i < n.
bool check_weight_identity(const Complex& c);

/// Full n-simplex on vertices 0..n.
Complex full_simplex(int n);

struct LabeledComplex {
  Complex complex;
  /// labels[dense id] = label as it appeared in the input.
  std::vector<std::uint64_t> labels;
};

/// One maximal simplex per line; '#' starts a comment; blank lines ignored.
/// Labels get dense ids in order of first appearance. Throws ParseError.
LabeledComplex parse_complex_text(std::istream& in);
LabeledComplex read_complex_file(const std::string& path);
void write_complex_text(std::ostream& out, const Complex& c);

/// Stable 64-bit FNV-1a hash of the canonical top simplices.
std::uint64_t content_hash(const Complex& c);

}  // namespace garland
