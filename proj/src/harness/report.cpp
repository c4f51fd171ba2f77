#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "garland/error.hpp"
#include "garland/harness.hpp"

namespace garland::harness {

namespace {

using json = nlohmann::ordered_json;

std::string ex(const Rational& r) { return to_exact_string(r); }

std::string show(const IsolatedRoot& r) {
  if (r.is_rational) return ex(r.value);
  std::ostringstream out;
  out.precision(10);
  out << to_double(r.midpoint()) << " in (" << ex(r.lo) << ", " << ex(r.hi) << ")";
  return out.str();
}

}  // namespace

json to_json(const IsolatedRoot& r) {
  json j{{"lo", ex(r.lo)}, {"hi", ex(r.hi)}, {"exact", nullptr}, {"zero", r.is_zero}, {"approx", to_double(r.midpoint())}};
  if (r.is_rational) j["exact"] = ex(r.value);
  return j;
}

IsolatedRoot root_from_json(const json& j) {
  IsolatedRoot r;
  r.lo = parse_rational(j.at("lo").get<std::string>());
  r.hi = parse_rational(j.at("hi").get<std::string>());
  r.is_zero = j.at("zero").get<bool>();
  if (!j.at("exact").is_null()) {
    r.is_rational = true;
    r.value = parse_rational(j.at("exact").get<std::string>());
  }
  return r;
}

json to_json(const Verdict& v) {
  return json{{"theorem", v.theorem}, {"instance", v.instance}, {"status", to_string(v.status)}, {"witness", v.witness}};
}

json to_json(const SpectralReport& r) {
  json j;
  if (r.instance.hash) {
    std::ostringstream h;
    h << std::hex << *r.instance.hash;
    j["instance"] = json{{"complex_hash", h.str()}, {"i", r.instance.i}};
  } else {
    j["instance"] = json{{"ell", r.instance.ell}, {"q", r.instance.q}, {"i", r.instance.i}};
  }
  j["label"] = r.instance.label();
  j["dim"] = r.dim;
  j["minpoly"] = r.minpoly.to_exact_string();
  j["minpoly_pretty"] = r.minpoly.pretty();
  j["degree"] = r.minpoly.degree();
  j["roots"] = json::array();
  for (const auto& root : r.roots.roots) j["roots"].push_back(to_json(root));
  j["m"] = to_json(r.m);
  j["M"] = to_json(r.M);
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) j["verdicts"].push_back(to_json(v));
  if (r.conjecture) j["conjecture"] = *r.conjecture;
  json timings = json::object();
  for (const auto& [k, v] : r.timings) timings[k] = v;
  j["timings"] = timings;
  return j;
}

json without_timings(json j) {
  if (j.is_object()) {
    j.erase("timings");
    for (auto& [k, v] : j.items()) v = without_timings(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = without_timings(v);
  }
  return j;
}

std::string to_text(const SpectralReport& r) {
  std::ostringstream out;
  out << r.instance.label() << "  dim C^" << r.instance.i << " = " << r.dim << "\n";
  out << "  minimal polynomial: " << r.minpoly.pretty() << "\n";
  out << "  exact: " << r.minpoly.to_exact_string() << "\n";
  out << "  roots:";
  for (const auto& root : r.roots.roots) out << "\n    " << show(root);
  out << "\n  m = " << show(r.m) << "\n  M = " << show(r.M) << "\n";
  if (r.conjecture) out << "  conjecture epsilon ~ " << (*r.conjecture)["epsilon"]["approx"].get<double>() << "\n";
  for (const auto& v : r.verdicts) {
    out << "  [" << to_string(v.status) << "] " << v.theorem;
    if (v.instance != r.instance.label()) out << " (" << v.instance << ")";
    out << "\n";
  }
  return out.str();
}

std::vector<InstanceKey> grid_instances(Grid g) {
  std::vector<InstanceKey> out;
  for (int q : {2, 3, 4, 5, 7}) out.push_back(InstanceKey::building(1, q, 0));
  for (int q : {2, 3}) {
    for (int i : {0, 1}) out.push_back(InstanceKey::building(2, q, i));
  }
  out.push_back(InstanceKey::building(3, 2, 0));
  if (g == Grid::Extended) {
    for (int q : {4, 5, 7}) {
      for (int i : {0, 1}) out.push_back(InstanceKey::building(2, q, i));
    }
    out.push_back(InstanceKey::building(3, 2, 1));
    out.push_back(InstanceKey::building(3, 2, 2));
    out.push_back(InstanceKey::building(3, 3, 0));
    out.push_back(InstanceKey::building(4, 2, 0));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json run_report(Session& s, Grid g) {
  const auto start = std::chrono::steady_clock::now();
  const auto instances = grid_instances(g);
  std::vector<json> results(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      const auto& key = instances[k];
      try {
        results[k] = to_json(verify_building(s, key.ell, key.q, key.i));
      } catch (const Error& e) {
        results[k] = json{{"label", key.label()}, {"error", to_string(e.code())}, {"message", e.what()}};
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, s.options().threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  json summary{{"certified-true", 0}, {"certified-false", 0}, {"inconclusive-at-width", 0}, {"errors", 0}};
  json failures = json::array();
  for (const auto& r : results) {
    if (r.contains("error")) {
      summary["errors"] = summary["errors"].get<int>() + 1;
      continue;
    }
    for (const auto& v : r["verdicts"]) {
      const auto status = v["status"].get<std::string>();
      summary[status] = summary[status].get<int>() + 1;
      if (status != "certified-true") failures.push_back(json{{"theorem", v["theorem"]}, {"instance", v["instance"]}, {"status", status}});
    }
  }
  summary["not_certified_true"] = failures;

  json report;
  report["tool"] = "garland";
  report["version"] = kVersion;
  report["grid"] = g == Grid::Default ? "default" : "extended";
  report["width"] = ex(s.options().width);
  report["instances"] = results;
  report["summary"] = summary;
  report["timings"] = json{{"total_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};
  return report;
}

}  // namespace garland::harness
