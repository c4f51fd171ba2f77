#include "garland/building.hpp"

#include <algorithm>
#include <numeric>

#include "garland/error.hpp"

namespace garland {

std::vector<int> Subspace::pivots() const {
  std::vector<int> out;
  for (int r = 0; r < dim; ++r) {
    int c = 0;
    while (c < ambient && at(r, c) == 0) ++c;
    out.push_back(c);
  }
  return out;
}

std::vector<Subspace> enumerate_subspaces(int n, int d, const gf::FieldSpec& field) {
  if (n < 0 || d < 0 || d > n) throw Error(ErrorCode::DimensionOutOfRange, "need 0 <= d <= n");
  const int q = field.order();
  std::vector<Subspace> out;
  if (d == 0) {
    out.push_back(Subspace{field, n, 0, {}});
    return out;
  }
  std::vector<int> piv(d);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    std::vector<std::pair<int, int>> free;
    for (int r = 0; r < d; ++r) {
      for (int c = piv[r] + 1; c < n; ++c) {
        if (!std::binary_search(piv.begin(), piv.end(), c)) free.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free.size(), 0);
    while (true) {
      Subspace s{field, n, d, std::vector<gf::ElementIndex>(static_cast<std::size_t>(d) * n, 0)};
      for (int r = 0; r < d; ++r) s.rows[r * n + piv[r]] = 1;
      for (std::size_t f = 0; f < free.size(); ++f) {
        s.rows[free[f].first * n + free[f].second] = static_cast<gf::ElementIndex>(digits[f]);
      }
      out.push_back(std::move(s));
      int pos = static_cast<int>(digits.size()) - 1;
      while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
    int i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::uint64_t gaussian_binomial(int n, int d, std::uint64_t q) {
  if (d < 0 || d > n) return 0;
  // Exact: numerator and denominator products stay within range for the
  // small cases used here; divide at the end.
  unsigned __int128 num = 1, den = 1;
  auto pw = [q](int e) {
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  for (int j = 0; j < d; ++j) {
    num *= pw(n - j) - 1;
    den *= pw(j + 1) - 1;
  }
  return static_cast<std::uint64_t>(num / den);
}

bool contained_in(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || !(a.field == b.field)) throw Error(ErrorCode::AmbientMismatch, "different ambient spaces");
  if (a.dim > b.dim) return false;
  const auto& f = a.field;
  const auto bp = b.pivots();
  std::vector<gf::ElementIndex> v(a.ambient);
  for (int r = 0; r < a.dim; ++r) {
    std::copy(a.rows.begin() + r * a.ambient, a.rows.begin() + (r + 1) * a.ambient, v.begin());
    for (int br = 0; br < b.dim; ++br) {
      const gf::ElementIndex coef = v[bp[br]];
      if (coef == 0) continue;
      for (int c = 0; c < a.ambient; ++c) v[c] = f.sub(v[c], f.mul(coef, b.at(br, c)));
    }
    if (std::any_of(v.begin(), v.end(), [](gf::ElementIndex x) { return x != 0; })) return false;
  }
  return true;
}

bool incident(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient || !(a.field == b.field)) throw Error(ErrorCode::AmbientMismatch, "different ambient spaces");
  if (a.dim < b.dim) return contained_in(a, b);
  if (b.dim < a.dim) return contained_in(b, a);
  return false;
}

Complex TypedBuilding::chamber_complex() const { return Complex::from_maximal_simplices({fundamental_chamber}); }

TypedBuilding flag_complex(int ell, const gf::FieldSpec& field) {
  if (ell < 1) throw Error(ErrorCode::DimensionOutOfRange, "building rank ell must be >= 1");
  const int n = ell + 2;
  TypedBuilding b;
  b.ell = ell;
  b.q = field.order();
  std::vector<VertexId> offset(n + 1, 0);
  for (int d = 1; d <= ell + 1; ++d) {
    auto subs = enumerate_subspaces(n, d, field);
    offset[d] = static_cast<VertexId>(b.subspaces.size());
    for (auto& s : subs) {
      b.subspaces.push_back(std::move(s));
      b.types.push_back(d - 1);
    }
  }
  offset[ell + 2] = static_cast<VertexId>(b.subspaces.size());

  // up[v] = vertices of the next dimension containing v
  std::vector<std::vector<VertexId>> up(b.subspaces.size());
  for (int d = 1; d <= ell; ++d) {
    for (VertexId lo = offset[d]; lo < offset[d + 1]; ++lo) {
      for (VertexId hi = offset[d + 1]; hi < offset[d + 2]; ++hi) {
        if (contained_in(b.subspaces[lo], b.subspaces[hi])) up[lo].push_back(hi);
      }
    }
  }

  std::vector<std::vector<VertexId>> chambers;
  std::vector<VertexId> chain;
  auto extend = [&](auto&& self, VertexId v) -> void {
    chain.push_back(v);
    if (static_cast<int>(chain.size()) == ell + 1) {
      chambers.push_back(chain);
    } else {
      for (auto w : up[v]) self(self, w);
    }
    chain.pop_back();
  };
  for (VertexId v = offset[1]; v < offset[2]; ++v) extend(extend, v);

  b.complex = Complex::from_maximal_simplices(std::move(chambers));
  for (int d = 1; d <= ell + 1; ++d) b.fundamental_chamber.push_back(offset[d]);
  return b;
}

Cochain type_invariant_lift(const TypedBuilding& b, const Cochain& on_chamber) {
  const int i = on_chamber.degree;
  const Complex k = b.chamber_complex();
  if (i < 0 || i > b.ell || on_chamber.values.size() != k.count(i)) {
    throw Error(ErrorCode::DimensionMismatch, "cochain is not on the fundamental chamber's faces");
  }
  const Complex& c = b.complex;
  Cochain out = Cochain::zero(c, i);
  std::vector<VertexId> by_type(i + 1), face(i + 1);
  for (std::size_t s = 0; s < c.count(i); ++s) {
    auto verts = c.simplex(i, s);
    by_type.assign(verts.begin(), verts.end());
    std::sort(by_type.begin(), by_type.end(), [&](VertexId x, VertexId y) { return b.types[x] < b.types[y]; });
    for (int j = 0; j <= i; ++j) face[j] = b.fundamental_chamber[b.types[by_type[j]]];
    // f~(s ordered by type) = f(face ordered by type); evaluate() handles the face's orientation.
    const int sign = orientation_sign(by_type).second;
    out.values[s] = sign * evaluate(k, on_chamber, face);
  }
  return out;
}

std::vector<std::size_t> type_representatives(const TypedBuilding& b, int i) {
  const Complex& c = b.complex;
  if (i < 0 || i > c.dimension()) throw Error(ErrorCode::DegreeOutOfRange, "no simplices of dimension " + std::to_string(i));
  std::vector<std::vector<int>> seen;
  std::vector<std::size_t> out;
  std::vector<int> ts(i + 1);
  for (std::size_t s = 0; s < c.count(i); ++s) {
    const auto verts = c.simplex(i, s);
    for (int j = 0; j <= i; ++j) ts[j] = b.types[verts[j]];
    std::sort(ts.begin(), ts.end());
    if (std::find(seen.begin(), seen.end(), ts) == seen.end()) {
      seen.push_back(ts);
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace garland
