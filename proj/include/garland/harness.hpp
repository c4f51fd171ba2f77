#pragma once

#include <cstdint>
#include <filesystem>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "garland/building.hpp"
#include "garland/complex.hpp"
#include "garland/paper.hpp"
#include "garland/spectra.hpp"
#include "json.hpp"

namespace garland::harness {

inline constexpr const char* kVersion = "1.0.0";

enum class Status { CertifiedTrue, CertifiedFalse, Inconclusive };

/// "certified-true", "certified-false", "inconclusive-at-width".
std::string to_string(Status s);

struct Verdict {
  std::string theorem;
  std::string instance;
  Status status = Status::Inconclusive;
  nlohmann::ordered_json witness;
};

/// A building instance (ell, q, i), or an ingested complex identified by hash.
struct InstanceKey {
  int ell = 0;
  int q = 0;
  int i = 0;
  std::optional<std::uint64_t> hash;

  static InstanceKey building(int ell, int q, int i) { return InstanceKey{ell, q, i, std::nullopt}; }
  static InstanceKey complex(std::uint64_t hash, int i) { return InstanceKey{0, 0, i, hash}; }
  std::string label() const;
  bool operator<(const InstanceKey& o) const;
  bool operator==(const InstanceKey& o) const = default;
};

struct Budget {
  std::uint64_t max_cochain_dim = 0;
  std::uint64_t max_chambers = 0;
  static Budget default_grid() { return Budget{2500, 20000}; }
  static Budget extended() { return Budget{100000, 1100000}; }
};

/// Number of i-simplices of the flag complex of F_q^(ell+2), by Gaussian binomials.
std::uint64_t building_simplex_count(int ell, int q, int i);

/// Throws BudgetExceeded.
void check_budget(const Budget& b, int ell, int q, int i);

struct SpectralReport {
  InstanceKey instance;
  std::size_t dim = 0;
  RatPolynomial minpoly;
  RootIsolation roots;
  IsolatedRoot m;
  IsolatedRoot M;
  std::vector<Verdict> verdicts;
  std::optional<nlohmann::ordered_json> conjecture;
  std::optional<PaperComparison> paper;
  std::map<std::string, double> timings;
};

/// Spectral data of the vertex links of a complex on C^{i-1}.
struct LinkSpectra {
  int degree = 0;
  /// lcm of the link minimal polynomials; its extreme roots are lambda_max and lambda_min.
  RatPolynomial combined;
  /// Distinct squarefree link minimal polynomials, in order of first occurrence.
  std::vector<RatPolynomial> distinct;
  /// Vertex ids (in the complex) of a first link realizing each distinct polynomial.
  std::vector<VertexId> witnesses;
  IsolatedRoot lambda_min;
  IsolatedRoot lambda_max;
  /// H~^{i-1}(Lk v) = 0 for every vertex v.
  bool links_acyclic = true;
  std::optional<VertexId> cyclic_witness;
};

struct SessionOptions {
  std::optional<std::filesystem::path> cache_dir;
  int threads = 1;
  std::uint64_t seed = 0;
  Rational width{1, 1000000};
  Rational floor{1, 1000000000000};
  Budget budget = Budget::default_grid();
};

/// Memoizes buildings and spectra; spectra are also cached on disk when a
/// cache directory is configured. Safe to share between threads.
class Session {
 public:
  explicit Session(SessionOptions options = {});
  const SessionOptions& options() const { return options_; }

  /// Throws BudgetExceeded (chamber count).
  std::shared_ptr<const TypedBuilding> building(int ell, int q);

  /// Minimal polynomial, root isolation and extremes of Delta on C^i; no verdicts.
  SpectralReport spectrum(int ell, int q, int i);
  SpectralReport spectrum(const Complex& c, int i);

  LinkSpectra link_spectra(const Complex& c, int i);

 private:
  SpectralReport compute(const Complex& c, const InstanceKey& key, double build_seconds,
                         std::optional<std::vector<std::size_t>> certification_columns = std::nullopt);
  std::optional<SpectralReport> load(const InstanceKey& key) const;
  void store(const SpectralReport& r) const;
  std::string cache_name(const InstanceKey& key) const;

  SessionOptions options_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, std::shared_future<std::shared_ptr<const TypedBuilding>>> buildings_;
  std::map<InstanceKey, std::shared_future<SpectralReport>> spectra_;
};

// Theorem checks. Each works from report data alone, so a verdict can be
// re-derived without recomputing any spectrum.

/// p(ell+1) = 0 and no root above ell+1.
Verdict verify_max_eigenvalue(const SpectralReport& r, int ell);
/// Smallest nonzero root <= ell - i.
Verdict verify_min_bound(const SpectralReport& r, int ell);
/// ell-i+1, ..., ell+1 are roots; the witness also says whether ell-i is.
Verdict verify_integer_eigenvalues(const SpectralReport& r, int ell);
/// Upper and lower Fundamental Inequality, the comparison with link extremes,
/// and the lifting of link eigenvalues. Needs 1 <= i <= n-1.
std::vector<Verdict> verify_fundamental_inequality(const SpectralReport& r, const LinkSpectra& links, int n,
                                                   const Rational& floor);
/// Hypothesis lambda_min > (ell+1-i)/(i+1) of the vanishing theorem for H^i,
/// read from the spectrum on C^{i-1}.
Verdict verify_vanishing_threshold(const SpectralReport& lower, int ell, int i, const Rational& floor);
/// Distance of each nonzero root to the nearest integer in [ell-i, ell+1]; "epsilon" is the maximum.
nlohmann::ordered_json conjecture_report(const SpectralReport& r, int ell);
/// Squarefreeness and an all-real spectrum.
std::vector<Verdict> verify_spectrum_shape(const SpectralReport& r);
Verdict paper_verdict(const SpectralReport& r, const PaperComparison& cmp);

/// Spectrum plus every applicable check for the building instance; for
/// 1 <= i <= ell also the vanishing-threshold check for H^i. For i = ell only
/// that check is run (Delta on the top degree is out of domain).
SpectralReport verify_building(Session& s, int ell, int q, int i);
SpectralReport verify_complex(Session& s, const Complex& c, int i);

enum class Grid { Default, Extended };
/// Sorted by instance key.
std::vector<InstanceKey> grid_instances(Grid g);

/// Runs verify_building over the grid on options().threads workers; the
/// report lists instances in key order whatever the scheduling.
nlohmann::ordered_json run_report(Session& s, Grid g);

nlohmann::ordered_json to_json(const IsolatedRoot& r);
nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const SpectralReport& r);
IsolatedRoot root_from_json(const nlohmann::ordered_json& j);

/// Copy of a report without any "timings" members.
nlohmann::ordered_json without_timings(nlohmann::ordered_json j);

/// Human-readable summary of one report.
std::string to_text(const SpectralReport& r);

}  // namespace garland::harness
