#include "garland/laplace.hpp"

#include <algorithm>
#include <map>

#include "garland/error.hpp"

namespace garland {

Rational evaluate(const Complex& c, const Cochain& f, std::span<const VertexId> oriented) {
  if (static_cast<int>(oriented.size()) != f.degree + 1) {
    throw Error(ErrorCode::DegreeMismatch, "simplex dimension differs from cochain degree");
  }
  auto [canonical, sign] = orientation_sign(oriented);
  return sign * f.values[c.index_of(canonical)];
}

namespace {

void check_cochain(const Complex& c, const Cochain& f) {
  if (f.degree < 0 || f.degree > c.dimension() || f.values.size() != c.count(f.degree)) {
    throw Error(ErrorCode::DegreeMismatch, "cochain does not match the complex");
  }
}

}  // namespace

Rational inner_product(const Complex& c, const Cochain& f, const Cochain& g) {
  if (f.degree != g.degree) throw Error(ErrorCode::DegreeMismatch, "pairing cochains of different degrees");
  check_cochain(c, f);
  check_cochain(c, g);
  Rational sum = 0;
  const auto& w = c.weights(f.degree);
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    if (sgn(f.values[s]) != 0 && sgn(g.values[s]) != 0) sum += w[s] * (f.values[s] * g.values[s]);
  }
  return sum;
}

Cochain coboundary(const Complex& c, const Cochain& f) {
  check_cochain(c, f);
  const int i = f.degree;
  if (i >= c.dimension()) throw Error(ErrorCode::DegreeOutOfRange, "coboundary of a top-degree cochain");
  Cochain out = Cochain::zero(c, i + 1);
  for (std::size_t t = 0; t < out.values.size(); ++t) {
    auto faces = c.faces(i + 1, t);
    Rational sum = 0;
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (j % 2 == 0) {
        sum += f.values[faces[j]];
      } else {
        sum -= f.values[faces[j]];
      }
    }
    out.values[t] = std::move(sum);
  }
  return out;
}

Cochain adjoint_delta(const Complex& c, const Cochain& g) {
  check_cochain(c, g);
  const int i = g.degree;
  if (i < 1) throw Error(ErrorCode::DegreeOutOfRange, "adjoint of a degree-0 cochain");
  Cochain out = Cochain::zero(c, i - 1);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    auto verts = c.simplex(i - 1, s);
    Rational sum = 0;
    for (auto t : c.cofaces(i - 1, s)) {
      auto tv = c.simplex(i, t);
      // v is the vertex of t not in s; sorting [v, s] takes (#vertices of s below v) swaps.
      std::size_t below = 0;
      for (std::size_t a = 0, b = 0; a < tv.size(); ++a) {
        if (b < verts.size() && tv[a] == verts[b]) {
          ++b;
        } else {
          below = b;
        }
      }
      Rational term = Rational(c.weight(i, t)) * g.values[t];
      if (below % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out.values[s] = sum / c.weight(i - 1, s);
  }
  return out;
}

Cochain laplacian_apply(const Complex& c, const Cochain& f) {
  if (f.degree < 0 || f.degree >= c.dimension()) {
    throw Error(ErrorCode::DegreeOutOfRange, "Laplacian is defined on C^i for 0 <= i <= n-1");
  }
  return adjoint_delta(c, coboundary(c, f));
}

Cochain rho_vertex(const Complex& c, const Cochain& f, VertexId v) {
  check_cochain(c, f);
  (void)c.vertex_index(v);
  Cochain out = Cochain::zero(c, f.degree);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    auto verts = c.simplex(f.degree, s);
    if (std::binary_search(verts.begin(), verts.end(), v)) out.values[s] = f.values[s];
  }
  return out;
}

Cochain rho_type(const Complex& c, const std::vector<int>& types, const Cochain& f, int alpha) {
  check_cochain(c, f);
  if (std::find(types.begin(), types.end(), alpha) == types.end()) {
    throw Error(ErrorCode::UnknownType, "no vertex of type " + std::to_string(alpha));
  }
  Cochain out = Cochain::zero(c, f.degree);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    for (auto v : c.simplex(f.degree, s)) {
      if (types.at(v) == alpha) {
        out.values[s] = f.values[s];
        break;
      }
    }
  }
  return out;
}

Cochain tau_vertex(const Complex& c, const Cochain& f, VertexId v, const Link& lk) {
  check_cochain(c, f);
  const int i = f.degree;
  if (i < 1) throw Error(ErrorCode::DegreeOutOfRange, "tau_v needs degree >= 1");
  Cochain out = Cochain::zero(lk.complex, i - 1);
  Simplex joined(i + 1);
  for (std::size_t s = 0; s < out.values.size(); ++s) {
    auto local = lk.complex.simplex(i - 1, s);
    std::size_t below = 0;
    for (std::size_t j = 0; j < local.size(); ++j) {
      const VertexId parent = lk.to_parent[local[j]];
      if (parent < v) ++below;
      joined[j] = parent;
    }
    joined[i] = v;
    std::sort(joined.begin(), joined.end());
    auto idx = c.find(joined);
    if (!idx) continue;
    out.values[s] = (below % 2 == 0) ? f.values[*idx] : Rational(-f.values[*idx]);
  }
  return out;
}

std::vector<Rational> SparseRationalMatrix::apply(const std::vector<Rational>& x) const {
  std::vector<Rational> y(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational sum = 0;
    for (std::size_t k = row_start[r]; k < row_start[r + 1]; ++k) {
      if (sgn(x[col[k]]) != 0) sum += value[k] * x[col[k]];
    }
    y[r] = std::move(sum);
  }
  return y;
}

Integer ScaledIntegerMatrix::row_norm() const {
  Integer best = 0;
  for (std::size_t r = 0; r < dim; ++r) {
    Integer sum = 0;
    for (std::size_t k = row_start[r]; k < row_start[r + 1]; ++k) sum += Integer(std::abs(value[k]));
    if (sum > best) best = sum;
  }
  return best;
}

ScaledIntegerMatrix to_scaled_integer(const SparseRationalMatrix& m) {
  if (m.rows != m.cols) throw Error(ErrorCode::NotSquare, "operator is not square");
  ScaledIntegerMatrix out;
  out.dim = m.rows;
  out.scale = 1;
  for (const auto& v : m.value) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), v.get_den_mpz_t());
  out.row_start = m.row_start;
  out.col = m.col;
  out.value.reserve(m.value.size());
  for (const auto& v : m.value) {
    Integer scaled = v.get_num() * (out.scale / v.get_den());
    if (!scaled.fits_slong_p()) throw Error(ErrorCode::BudgetExceeded, "scaled matrix entry exceeds 64 bits");
    out.value.push_back(scaled.get_si());
  }
  return out;
}

LinearOperator assemble_matrix(const Complex& c, int i) {
  if (i < 0 || i >= c.dimension()) {
    throw Error(ErrorCode::DegreeOutOfRange, "Laplacian is defined on C^i for 0 <= i <= n-1");
  }
  SparseRationalMatrix m;
  m.rows = m.cols = c.count(i);
  m.row_start.push_back(0);
  std::map<std::uint32_t, Integer> row;
  for (std::size_t s = 0; s < m.rows; ++s) {
    row.clear();
    for (auto t : c.cofaces(i, s)) {
      auto faces = c.faces(i + 1, t);
      std::size_t js = 0;
      while (faces[js] != s) ++js;
      const auto wt = c.weight(i + 1, t);
      for (std::size_t j = 0; j < faces.size(); ++j) {
        if ((js + j) % 2 == 0) {
          row[faces[j]] += wt;
        } else {
          row[faces[j]] -= wt;
        }
      }
    }
    const Integer ws(static_cast<unsigned long>(c.weight(i, s)));
    for (auto& [col, num] : row) {
      if (num == 0) continue;
      Rational v(num, ws);
      v.canonicalize();
      m.col.push_back(col);
      m.value.push_back(std::move(v));
    }
    m.row_start.push_back(m.value.size());
  }
  LinearOperator op;
  op.domain_degree = op.codomain_degree = i;
  op.dim = m.rows;
  op.matrix = std::move(m);
  op.apply = [m = *op.matrix](const std::vector<Rational>& x) { return m.apply(x); };
  return op;
}

LinearOperator laplacian_operator(const Complex& c, int i) {
  if (i < 0 || i >= c.dimension()) {
    throw Error(ErrorCode::DegreeOutOfRange, "Laplacian is defined on C^i for 0 <= i <= n-1");
  }
  LinearOperator op;
  op.domain_degree = op.codomain_degree = i;
  op.dim = c.count(i);
  op.apply = [&c, i](const std::vector<Rational>& x) { return laplacian_apply(c, Cochain{i, x}).values; };
  return op;
}

LinearOperator scale_operator(const LinearOperator& op, const Rational& factor) {
  LinearOperator out;
  out.domain_degree = op.domain_degree;
  out.codomain_degree = op.codomain_degree;
  out.dim = op.dim;
  if (op.matrix) {
    SparseRationalMatrix m = *op.matrix;
    for (auto& v : m.value) v *= factor;
    out.matrix = m;
    out.apply = [m](const std::vector<Rational>& x) { return m.apply(x); };
  } else {
    out.apply = [inner = op.apply, factor](const std::vector<Rational>& x) {
      auto y = inner(x);
      for (auto& v : y) v *= factor;
      return y;
    };
  }
  return out;
}

SparseRationalMatrix materialize(const LinearOperator& op) {
  if (op.matrix) return *op.matrix;
  // columns first, then transpose into CSR
  std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rows(op.dim);
  std::vector<Rational> e(op.dim);
  for (std::size_t j = 0; j < op.dim; ++j) {
    e[j] = 1;
    auto col = op.apply(e);
    if (col.size() != op.dim) throw Error(ErrorCode::NotSquare, "operator is not square");
    e[j] = 0;
    for (std::size_t r = 0; r < op.dim; ++r) {
      if (sgn(col[r]) != 0) rows[r].emplace_back(static_cast<std::uint32_t>(j), col[r]);
    }
  }
  SparseRationalMatrix m;
  m.rows = m.cols = op.dim;
  m.row_start.push_back(0);
  for (auto& r : rows) {
    for (auto& [c, v] : r) {
      m.col.push_back(c);
      m.value.push_back(std::move(v));
    }
    m.row_start.push_back(m.value.size());
  }
  return m;
}

void write_matrix_dump(std::ostream& out, const SparseRationalMatrix& m, int degree) {
  out << m.rows << ' ' << m.cols << ' ' << degree << '\n';
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t k = m.row_start[r]; k < m.row_start[r + 1]; ++k) {
      out << r << ' ' << m.col[k] << ' ' << to_exact_string(m.value[k]) << '\n';
    }
  }
}

}  // namespace garland
