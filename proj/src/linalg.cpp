#include "garland/linalg.hpp"

#include <map>

#include "garland/error.hpp"
#include "garland/spectra.hpp"

namespace garland {

std::vector<std::vector<Rational>> nullspace(DenseRationalMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) v[pivot_cols[k]] = -m[k][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t exact_rank(const SparseRationalMatrix& m) {
  using Row = std::map<std::uint32_t, Rational>;
  std::map<std::uint32_t, Row> pivots;  // leading column -> reduced row
  for (std::size_t r = 0; r < m.rows; ++r) {
    Row row;
    for (std::size_t k = m.row_start[r]; k < m.row_start[r + 1]; ++k) row[m.col[k]] = m.value[k];
    while (!row.empty()) {
      auto lead = row.begin();
      auto it = pivots.find(lead->first);
      if (it == pivots.end()) {
        const std::uint32_t c = lead->first;
        pivots.emplace(c, std::move(row));
        break;
      }
      const Rational f = lead->second / it->second.begin()->second;
      for (const auto& [c, v] : it->second) {
        Rational& cell = row[c];
        cell -= f * v;
        if (sgn(cell) == 0) row.erase(c);
      }
    }
  }
  return pivots.size();
}

DenseRationalMatrix to_dense(const SparseRationalMatrix& m) {
  DenseRationalMatrix d(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t k = m.row_start[r]; k < m.row_start[r + 1]; ++k) d[r][m.col[k]] = m.value[k];
  }
  return d;
}

SparseRationalMatrix coboundary_matrix(const Complex& c, int i) {
  if (i < 0 || i >= c.dimension()) throw Error(ErrorCode::DegreeOutOfRange, "no coboundary out of the top degree");
  SparseRationalMatrix m;
  m.rows = c.count(i + 1);
  m.cols = c.count(i);
  m.row_start.push_back(0);
  for (std::size_t t = 0; t < m.rows; ++t) {
    auto faces = c.faces(i + 1, t);
    std::vector<std::pair<std::uint32_t, int>> entries;
    for (std::size_t j = 0; j < faces.size(); ++j) entries.emplace_back(faces[j], j % 2 == 0 ? 1 : -1);
    std::sort(entries.begin(), entries.end());
    for (auto [col, sign] : entries) {
      m.col.push_back(col);
      m.value.emplace_back(sign);
    }
    m.row_start.push_back(m.value.size());
  }
  return m;
}

std::vector<std::size_t> reduced_cohomology_ranks(const Complex& c) {
  const int n = c.dimension();
  std::vector<std::size_t> rank_d(n + 1, 0);  // rank of d: C^i -> C^{i+1}
  for (int i = 0; i < n; ++i) rank_d[i] = exact_rank(coboundary_matrix(c, i));
  std::vector<std::size_t> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    const std::size_t incoming = (i == 0) ? 1 : rank_d[i - 1];  // augmentation Q -> C^0 has rank 1
    out[i] = c.count(i) - rank_d[i] - incoming;
  }
  return out;
}

}  // namespace garland
