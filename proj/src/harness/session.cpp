#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "garland/error.hpp"
#include "garland/harness.hpp"
#include "garland/linalg.hpp"

namespace garland::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string hex64(std::uint64_t h) {
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

unsigned __int128 saturating_mul(unsigned __int128 a, unsigned __int128 b) {
  constexpr unsigned __int128 cap = static_cast<unsigned __int128>(1) << 100;
  if (a != 0 && b > cap / a) return cap;
  return a * b;
}

template <class K, class V, class F>
V memoize(std::mutex& m, std::map<K, std::shared_future<V>>& table, const K& key, F&& make) {
  std::promise<V> promise;
  std::shared_future<V> future;
  bool owner = false;
  {
    std::lock_guard lock(m);
    auto it = table.find(key);
    if (it == table.end()) {
      future = promise.get_future().share();
      table.emplace(key, future);
      owner = true;
    } else {
      future = it->second;
    }
  }
  if (owner) {
    try {
      promise.set_value(make());
    } catch (...) {
      promise.set_exception(std::current_exception());
    }
  }
  return future.get();
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::CertifiedTrue:
      return "certified-true";
    case Status::CertifiedFalse:
      return "certified-false";
    case Status::Inconclusive:
      return "inconclusive-at-width";
  }
  return "?";
}

std::string InstanceKey::label() const {
  if (hash) return "complex=" + hex64(*hash) + " i=" + std::to_string(i);
  return "ell=" + std::to_string(ell) + " q=" + std::to_string(q) + " i=" + std::to_string(i);
}

bool InstanceKey::operator<(const InstanceKey& o) const {
  return std::tie(hash, ell, q, i) < std::tie(o.hash, o.ell, o.q, o.i);
}

std::uint64_t building_simplex_count(int ell, int q, int i) {
  const int n = ell + 2;
  if (i < 0 || i > ell) return 0;
  // Choose i+1 distinct dimensions from 1..ell+1; a flag of those dimensions is
  // counted top-down by nested Gaussian binomials.
  unsigned __int128 total = 0;
  std::vector<int> dims(i + 1);
  for (int k = 0; k <= i; ++k) dims[k] = k + 1;
  for (;;) {
    unsigned __int128 flags = 1;
    int outer = n;
    for (int k = i; k >= 0; --k) {
      flags = saturating_mul(flags, gaussian_binomial(outer, dims[k], q));
      outer = dims[k];
    }
    total += flags;
    int k = i;
    while (k >= 0 && dims[k] == ell + 1 - (i - k)) --k;
    if (k < 0) break;
    ++dims[k];
    for (int j = k + 1; j <= i; ++j) dims[j] = dims[j - 1] + 1;
  }
  constexpr unsigned __int128 max64 = ~std::uint64_t{0};
  return total > max64 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(total);
}

void check_budget(const Budget& b, int ell, int q, int i) {
  const auto chambers = building_simplex_count(ell, q, ell);
  if (chambers > b.max_chambers) {
    throw Error(ErrorCode::BudgetExceeded, "ell=" + std::to_string(ell) + " q=" + std::to_string(q) + " has " +
                                               std::to_string(chambers) + " chambers (budget " +
                                               std::to_string(b.max_chambers) + ")");
  }
  const auto dim = building_simplex_count(ell, q, i);
  if (dim > b.max_cochain_dim) {
    throw Error(ErrorCode::BudgetExceeded, "C^" + std::to_string(i) + " has dimension " + std::to_string(dim) +
                                               " (budget " + std::to_string(b.max_cochain_dim) + ")");
  }
}

Session::Session(SessionOptions options) : options_(std::move(options)) {
  if (options_.cache_dir) std::filesystem::create_directories(*options_.cache_dir);
}

std::shared_ptr<const TypedBuilding> Session::building(int ell, int q) {
  if (ell < 1) throw Error(ErrorCode::DimensionOutOfRange, "ell must be at least 1");
  const auto field = gf::make_field_of_order(q);
  check_budget(options_.budget, ell, q, 0);
  return memoize(mutex_, buildings_, std::pair{ell, q}, [&] {
    return std::shared_ptr<const TypedBuilding>(std::make_shared<TypedBuilding>(flag_complex(ell, field)));
  });
}

SpectralReport Session::spectrum(int ell, int q, int i) {
  if (i < 0 || i >= ell) throw Error(ErrorCode::DegreeOutOfRange, "need 0 <= i <= ell-1");
  check_budget(options_.budget, ell, q, i);
  const auto key = InstanceKey::building(ell, q, i);
  return memoize(mutex_, spectra_, key, [&] {
    if (auto cached = load(key)) return *cached;
    const auto t0 = Clock::now();
    const auto b = building(ell, q);
    std::optional<std::vector<std::size_t>> columns;
    if (b->complex.count(i) > Budget::default_grid().max_cochain_dim) columns = type_representatives(*b, i);
    auto r = compute(b->complex, key, seconds_since(t0), std::move(columns));
    store(r);
    return r;
  });
}

SpectralReport Session::spectrum(const Complex& c, int i) {
  if (i < 0 || i >= c.dimension()) throw Error(ErrorCode::DegreeOutOfRange, "need 0 <= i <= n-1");
  if (c.count(i) > options_.budget.max_cochain_dim) {
    throw Error(ErrorCode::BudgetExceeded, "C^" + std::to_string(i) + " has dimension " + std::to_string(c.count(i)));
  }
  const auto key = InstanceKey::complex(content_hash(c), i);
  return memoize(mutex_, spectra_, key, [&] {
    if (auto cached = load(key)) return *cached;
    auto r = compute(c, key, 0);
    store(r);
    return r;
  });
}

SpectralReport Session::compute(const Complex& c, const InstanceKey& key, double build_seconds,
                                std::optional<std::vector<std::size_t>> certification_columns) {
  SpectralReport r;
  r.instance = key;
  r.dim = c.count(key.i);
  r.timings["build_s"] = build_seconds;

  auto t = Clock::now();
  const auto op = assemble_matrix(c, key.i);
  r.timings["assemble_s"] = seconds_since(t);

  t = Clock::now();
  MinimalPolynomialOptions mp;
  mp.seed = options_.seed;
  mp.certification_columns = std::move(certification_columns);
  MinimalPolynomialInfo info;
  r.minpoly = minimal_polynomial(op, op.dim, mp, &info);
  r.timings["certified_columns"] = static_cast<double>(info.certified_columns);
  r.timings["minpoly_s"] = seconds_since(t);

  t = Clock::now();
  r.roots = isolate_real_roots(r.minpoly, options_.width);
  const auto ex = extract_extremes(r.minpoly, r.roots);
  r.m = ex.minimal_nonzero;
  r.M = ex.maximal;
  r.timings["roots_s"] = seconds_since(t);
  return r;
}

std::string Session::cache_name(const InstanceKey& key) const {
  std::string name = "v" + std::string(kVersion) + "_";
  if (key.hash) {
    name += "h" + hex64(*key.hash);
  } else {
    name += "l" + std::to_string(key.ell) + "_q" + std::to_string(key.q);
  }
  name += "_i" + std::to_string(key.i) + "_w" + options_.width.get_num().get_str() + "-" +
          options_.width.get_den().get_str() + ".json";
  return name;
}

std::optional<SpectralReport> Session::load(const InstanceKey& key) const {
  if (!options_.cache_dir) return std::nullopt;
  std::ifstream in(*options_.cache_dir / cache_name(key));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::ordered_json::parse(in);
    if (j.at("version") != kVersion || j.at("label") != key.label()) return std::nullopt;
    SpectralReport r;
    r.instance = key;
    r.dim = j.at("dim").get<std::size_t>();
    r.minpoly = RatPolynomial::parse(j.at("minpoly").get<std::string>());
    for (const auto& root : j.at("roots")) r.roots.roots.push_back(root_from_json(root));
    const auto ex = extract_extremes(r.minpoly, r.roots);
    r.m = ex.minimal_nonzero;
    r.M = ex.maximal;
    for (const auto& [name, value] : j.at("timings").items()) r.timings[name] = value.get<double>();
    r.timings["cache_hit"] = 1;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Session::store(const SpectralReport& r) const {
  if (!options_.cache_dir) return;
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["label"] = r.instance.label();
  j["dim"] = r.dim;
  j["minpoly"] = r.minpoly.to_exact_string();
  j["roots"] = nlohmann::ordered_json::array();
  for (const auto& root : r.roots.roots) j["roots"].push_back(to_json(root));
  j["timings"] = r.timings;

  const auto final_path = *options_.cache_dir / cache_name(r.instance);
  std::ostringstream tag;
  tag << ".tmp." << std::this_thread::get_id() << "." << Clock::now().time_since_epoch().count();
  auto tmp = final_path;
  tmp += tag.str();
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::IoError, "cannot write cache file " + tmp.string());
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, final_path);
}

LinkSpectra Session::link_spectra(const Complex& c, int i) {
  if (i < 1 || i > c.dimension() - 1) throw Error(ErrorCode::DegreeOutOfRange, "need 1 <= i <= n-1");
  LinkSpectra out;
  out.degree = i - 1;
  out.combined = RatPolynomial::constant(1);
  for (std::size_t idx = 0; idx < c.vertex_count(); ++idx) {
    const VertexId v = c.vertex(idx);
    const std::array<VertexId, 1> s{v};
    const auto lk = link(c, s);
    MinimalPolynomialOptions mp;
    mp.seed = options_.seed;
    const auto p = squarefree_part(minimal_polynomial(assemble_matrix(lk.complex, i - 1), lk.complex.count(i - 1), mp));
    if (std::find(out.distinct.begin(), out.distinct.end(), p) == out.distinct.end()) {
      out.distinct.push_back(p);
      out.witnesses.push_back(v);
      out.combined = lcm(out.combined, p);
    }
    if (out.links_acyclic && reduced_cohomology_ranks(lk.complex).at(i - 1) != 0) {
      out.links_acyclic = false;
      out.cyclic_witness = v;
    }
  }
  const auto roots = isolate_real_roots(out.combined, options_.width);
  const auto ex = extract_extremes(out.combined, roots);
  out.lambda_min = ex.minimal_nonzero;
  out.lambda_max = ex.maximal;
  return out;
}

}  // namespace garland::harness
