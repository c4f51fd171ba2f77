#include "garland/complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "garland/error.hpp"

namespace garland {

namespace {

// Binary search for a canonical simplex in a flat lexicographically sorted table.
std::optional<std::size_t> flat_find(const std::vector<VertexId>& flat, std::size_t stride,
                                     std::span<const VertexId> key) {
  std::size_t lo = 0, hi = flat.size() / stride;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const VertexId* row = flat.data() + mid * stride;
    if (std::lexicographical_compare(row, row + stride, key.begin(), key.end())) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < flat.size() / stride && std::equal(key.begin(), key.end(), flat.data() + lo * stride)) return lo;
  return std::nullopt;
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == n - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// All (k)-subsets of every top simplex, sorted and counted. Returns flat
// unique table and multiplicities.
void collect_faces(const std::vector<VertexId>& tops, int top_size, int k, VertexId max_vertex,
                   std::vector<VertexId>& flat_out, std::vector<std::uint64_t>& counts_out) {
  const auto combos = combinations(top_size, k);
  const std::size_t ntops = tops.size() / top_size;
  const std::size_t total = ntops * combos.size();

  int bits = 1;
  while ((static_cast<std::uint64_t>(1) << bits) <= max_vertex) ++bits;
  flat_out.clear();
  counts_out.clear();

  if (bits * k <= 64) {
    std::vector<std::uint64_t> keys;
    keys.reserve(total);
    for (std::size_t t = 0; t < ntops; ++t) {
      const VertexId* top = tops.data() + t * top_size;
      for (const auto& c : combos) {
        std::uint64_t key = 0;
        for (int idx : c) key = (key << bits) | top[idx];
        keys.push_back(key);
      }
    }
    std::sort(keys.begin(), keys.end());
    const std::uint64_t mask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    for (std::size_t i = 0; i < keys.size();) {
      std::size_t j = i;
      while (j < keys.size() && keys[j] == keys[i]) ++j;
      for (int p = k - 1; p >= 0; --p) flat_out.push_back(static_cast<VertexId>((keys[i] >> (bits * p)) & mask));
      counts_out.push_back(j - i);
      i = j;
    }
    return;
  }

  std::vector<VertexId> all;
  all.reserve(total * k);
  for (std::size_t t = 0; t < ntops; ++t) {
    const VertexId* top = tops.data() + t * top_size;
    for (const auto& c : combos) {
      for (int idx : c) all.push_back(top[idx]);
    }
  }
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(all.begin() + a * k, all.begin() + (a + 1) * k, all.begin() + b * k,
                                        all.begin() + (b + 1) * k);
  });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    auto same = [&](std::size_t a, std::size_t b) {
      return std::equal(all.begin() + a * k, all.begin() + (a + 1) * k, all.begin() + b * k);
    };
    while (j < order.size() && same(order[j], order[i])) ++j;
    flat_out.insert(flat_out.end(), all.begin() + order[i] * k, all.begin() + (order[i] + 1) * k);
    counts_out.push_back(j - i);
    i = j;
  }
}

}  // namespace

std::pair<Simplex, int> orientation_sign(std::span<const VertexId> oriented) {
  Simplex s(oriented.begin(), oriented.end());
  int inversions = 0;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) throw Error(ErrorCode::RepeatedVertex, "vertex " + std::to_string(s[a]) + " repeated");
      if (s[a] > s[b]) ++inversions;
    }
  }
  std::sort(s.begin(), s.end());
  return {std::move(s), (inversions % 2 == 0) ? 1 : -1};
}

Complex Complex::from_maximal_simplices(std::vector<std::vector<VertexId>> faces) {
  if (faces.empty()) throw Error(ErrorCode::EmptyInput, "no maximal simplices given");
  const std::size_t size = faces.front().size();
  if (size == 0) throw Error(ErrorCode::EmptyInput, "empty simplex");
  VertexId max_vertex = 0;
  for (auto& f : faces) {
    if (f.size() != size) throw Error(ErrorCode::MixedDimensions, "maximal simplices differ in dimension");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw Error(ErrorCode::RepeatedVertex, "simplex with a repeated vertex");
    }
    max_vertex = std::max(max_vertex, f.back());
  }
  std::sort(faces.begin(), faces.end());
  if (std::adjacent_find(faces.begin(), faces.end()) != faces.end()) {
    throw Error(ErrorCode::DuplicateSimplex, "maximal simplex listed twice");
  }

  Complex c;
  c.n_ = static_cast<int>(size) - 1;
  const int n = c.n_;
  std::vector<VertexId> tops;
  tops.reserve(faces.size() * size);
  for (const auto& f : faces) tops.insert(tops.end(), f.begin(), f.end());
  faces.clear();
  faces.shrink_to_fit();

  c.verts_.resize(n + 1);
  c.weights_.resize(n + 1);
  for (int i = 0; i < n; ++i) collect_faces(tops, n + 1, i + 1, max_vertex, c.verts_[i], c.weights_[i]);
  c.verts_[n] = std::move(tops);
  c.weights_[n].assign(c.verts_[n].size() / (n + 1), 1);

  c.faces_.resize(n + 1);
  c.coface_offsets_.resize(n + 1);
  c.cofaces_.resize(n + 1);
  std::vector<VertexId> face(n + 1);
  for (int i = 1; i <= n; ++i) {
    const std::size_t m = c.count(i);
    auto& out = c.faces_[i];
    out.resize(m * (i + 1));
    for (std::size_t s = 0; s < m; ++s) {
      const VertexId* row = c.verts_[i].data() + s * (i + 1);
      for (int j = 0; j <= i; ++j) {
        std::size_t p = 0;
        for (int a = 0; a <= i; ++a) {
          if (a != j) face[p++] = row[a];
        }
        auto idx = flat_find(c.verts_[i - 1], i, std::span<const VertexId>(face.data(), i));
        out[s * (i + 1) + j] = static_cast<std::uint32_t>(*idx);
      }
    }
    // invert into cofaces of dimension i-1
    auto& offsets = c.coface_offsets_[i - 1];
    auto& list = c.cofaces_[i - 1];
    offsets.assign(c.count(i - 1) + 1, 0);
    for (auto f : out) ++offsets[f + 1];
    std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
    list.resize(out.size());
    std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
    for (std::size_t s = 0; s < m; ++s) {
      for (int j = 0; j <= i; ++j) list[fill[out[s * (i + 1) + j]]++] = static_cast<std::uint32_t>(s);
    }
  }
  c.coface_offsets_[n].assign(c.count(n) + 1, 0);
  return c;
}

std::size_t Complex::count(int i) const {
  if (i < 0 || i > n_) return 0;
  return verts_[i].size() / (i + 1);
}

std::span<const VertexId> Complex::simplex(int i, std::size_t index) const {
  return std::span<const VertexId>(verts_[i].data() + index * (i + 1), i + 1);
}

Simplex Complex::simplex_copy(int i, std::size_t index) const {
  auto s = simplex(i, index);
  return Simplex(s.begin(), s.end());
}

std::optional<std::size_t> Complex::find(std::span<const VertexId> canonical) const {
  const int i = static_cast<int>(canonical.size()) - 1;
  if (i < 0 || i > n_) return std::nullopt;
  return flat_find(verts_[i], i + 1, canonical);
}

std::size_t Complex::index_of(std::span<const VertexId> canonical) const {
  auto idx = find(canonical);
  if (!idx) {
    std::string text;
    for (auto v : canonical) text += std::to_string(v) + " ";
    throw Error(ErrorCode::SimplexNotFound, "simplex [ " + text + "] not in complex");
  }
  return *idx;
}

std::size_t Complex::vertex_index(VertexId v) const {
  auto idx = flat_find(verts_[0], 1, std::span<const VertexId>(&v, 1));
  if (!idx) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v) + " not in complex");
  return *idx;
}

std::span<const std::uint32_t> Complex::faces(int i, std::size_t index) const {
  return std::span<const std::uint32_t>(faces_[i].data() + index * (i + 1), i + 1);
}

std::span<const std::uint32_t> Complex::cofaces(int i, std::size_t index) const {
  const auto& off = coface_offsets_[i];
  return std::span<const std::uint32_t>(cofaces_[i].data() + off[index], off[index + 1] - off[index]);
}

std::vector<std::uint32_t> Complex::top_simplices_containing(std::span<const VertexId> s) const {
  int i = static_cast<int>(s.size()) - 1;
  std::vector<std::uint32_t> level{static_cast<std::uint32_t>(index_of(s))};
  while (i < n_) {
    std::vector<std::uint32_t> next;
    for (auto idx : level) {
      auto cf = cofaces(i, idx);
      next.insert(next.end(), cf.begin(), cf.end());
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
    ++i;
  }
  return level;
}

std::vector<Simplex> Complex::maximal_simplices() const {
  std::vector<Simplex> out;
  out.reserve(count(n_));
  for (std::size_t t = 0; t < count(n_); ++t) out.push_back(simplex_copy(n_, t));
  return out;
}

Link link(const Complex& c, std::span<const VertexId> s) {
  const auto tops = c.top_simplices_containing(s);
  if (static_cast<int>(s.size()) - 1 >= c.dimension()) {
    throw Error(ErrorCode::DimensionOutOfRange, "link of a top-dimensional simplex is empty");
  }
  std::vector<std::vector<VertexId>> rest;
  rest.reserve(tops.size());
  std::vector<VertexId> ids;
  for (auto t : tops) {
    std::vector<VertexId> r;
    for (auto v : c.simplex(c.dimension(), t)) {
      if (!std::binary_search(s.begin(), s.end(), v)) r.push_back(v);
    }
    ids.insert(ids.end(), r.begin(), r.end());
    rest.push_back(std::move(r));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (auto& r : rest) {
    for (auto& v : r) v = static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  }
  return Link{Complex::from_maximal_simplices(std::move(rest)), std::move(ids)};
}

Complex star(const Complex& c, std::span<const VertexId> s) {
  std::vector<std::vector<VertexId>> tops;
  for (auto t : c.top_simplices_containing(s)) tops.push_back(c.simplex_copy(c.dimension(), t));
  return Complex::from_maximal_simplices(std::move(tops));
}

bool check_weight_identity(const Complex& c) {
  const int n = c.dimension();
  for (int i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < c.count(i); ++s) {
      std::uint64_t sum = 0;
      for (auto t : c.cofaces(i, s)) sum += c.weight(i + 1, t);
      if (sum != static_cast<std::uint64_t>(n - i) * c.weight(i, s)) return false;
    }
  }
  for (auto w : c.weights(n)) {
    if (w != 1) return false;
  }
  return true;
}

Complex full_simplex(int n) {
  std::vector<VertexId> top(n + 1);
  std::iota(top.begin(), top.end(), 0);
  return Complex::from_maximal_simplices({top});
}

LabeledComplex parse_complex_text(std::istream& in) {
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::vector<std::uint64_t> labels;
  std::vector<std::vector<VertexId>> tops;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string token;
    std::vector<VertexId> top;
    while (ls >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad vertex label '" + token + "'");
      }
      const std::uint64_t label = std::stoull(token);
      auto [it, inserted] = dense.try_emplace(label, static_cast<VertexId>(labels.size()));
      if (inserted) labels.push_back(label);
      top.push_back(it->second);
    }
    if (!top.empty()) tops.push_back(std::move(top));
  }
  return LabeledComplex{Complex::from_maximal_simplices(std::move(tops)), std::move(labels)};
}

LabeledComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  return parse_complex_text(in);
}

void write_complex_text(std::ostream& out, const Complex& c) {
  const int n = c.dimension();
  for (std::size_t t = 0; t < c.count(n); ++t) {
    auto s = c.simplex(n, t);
    for (std::size_t j = 0; j < s.size(); ++j) out << (j ? " " : "") << s[j];
    out << '\n';
  }
}

std::uint64_t content_hash(const Complex& c) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  const int n = c.dimension();
  mix(static_cast<std::uint64_t>(n));
  for (std::size_t t = 0; t < c.count(n); ++t) {
    for (auto v : c.simplex(n, t)) mix(v);
  }
  return h;
}

}  // namespace garland
