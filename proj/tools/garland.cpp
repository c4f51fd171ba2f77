#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "garland/error.hpp"
#include "garland/harness.hpp"

using namespace garland;
using namespace garland::harness;
using json = nlohmann::ordered_json;

namespace {

struct Target {
  int ell = 0;
  int q = 0;
  std::string complex_path;
  std::optional<LabeledComplex> complex;

  bool is_building() const { return complex_path.empty(); }

  void load() {
    if (!is_building() && !complex) complex = read_complex_file(complex_path);
  }
  int dimension() const { return is_building() ? ell : complex->complex.dimension(); }
};

void add_target(CLI::App* cmd, Target& t) {
  auto* ell = cmd->add_option("--ell", t.ell, "building rank")->check(CLI::PositiveNumber);
  auto* q = cmd->add_option("--q", t.q, "field order")->check(CLI::Range(2, 65535));
  auto* path = cmd->add_option("--complex", t.complex_path, "maximal simplices, one per line")->check(CLI::ExistingFile);
  ell->needs(q);
  q->needs(ell);
  ell->excludes(path);
  q->excludes(path);
  cmd->callback([cmd, ell, path] {
    if (ell->count() == 0 && path->count() == 0) throw CLI::RequiredError(cmd->get_name() + ": --ell/--q or --complex");
  });
}

// "1/1000", "3", "0.001" or "1e-6", all read exactly.
Rational parse_width(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
  std::string mantissa = text;
  long exponent = 0;
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    mantissa = text.substr(0, e);
    exponent = std::stol(text.substr(e + 1));
  }
  if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
    exponent -= static_cast<long>(mantissa.size() - dot - 1);
    mantissa.erase(dot, 1);
  }
  Rational r = parse_rational(mantissa.empty() ? "0" : mantissa);
  Integer ten = 1;
  for (long k = 0; k < std::labs(exponent); ++k) ten *= 10;
  r = exponent >= 0 ? Rational(r * ten) : Rational(r / ten);
  r.canonicalize();
  return r;
}

void emit(const json& j, const std::string& text, bool as_json) {
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path);
  body(out);
  if (!out) throw Error(ErrorCode::IoError, "write failed: " + path);
}

bool all_true(const SpectralReport& r) {
  for (const auto& v : r.verdicts) {
    if (v.status != Status::CertifiedTrue) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectra of Garland's Laplacian on finite buildings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  SessionOptions options;
  std::string cache_dir;
  bool as_json = false;
  app.add_option("--cache-dir", cache_dir, "on-disk spectrum cache")->envname("GARLAND_CACHE_DIR");
  app.add_option("--threads", options.threads, "worker threads for grid reports")->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "Krylov seed (results are certified and do not depend on it)");
  app.add_flag("--json", as_json, "print JSON instead of text");

  auto* build = app.add_subcommand("build", "construct a building and print simplex counts");
  int build_ell = 0, build_q = 0;
  std::string emit_path;
  build->add_option("--ell", build_ell, "building rank")->required()->check(CLI::PositiveNumber);
  build->add_option("--q", build_q, "field order")->required()->check(CLI::Range(2, 65535));
  build->add_option("--emit-complex", emit_path, "write the maximal simplices to a file");

  auto* spectrum = app.add_subcommand("spectrum", "minimal polynomial and certified roots of Delta on C^i");
  Target spec_target;
  int spec_i = 0;
  std::string width = "1/1000000", dump_path;
  add_target(spectrum, spec_target);
  spectrum->add_option("--i", spec_i, "cochain degree")->required()->check(CLI::NonNegativeNumber);
  spectrum->add_option("--width", width, "isolating interval width (e.g. 1/1000000 or 1e-6)");
  spectrum->add_option("--dump-matrix", dump_path, "write the assembled Laplacian");

  auto* verify = app.add_subcommand("verify", "certify the theorems on one instance");
  Target ver_target;
  std::optional<int> ver_i;
  bool extended = false;
  add_target(verify, ver_target);
  verify->add_option("--i", ver_i, "cochain degree (default: all)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--extended", extended, "use the extended size budget");

  auto* reproduce = app.add_subcommand("reproduce", "compare with a published minimal polynomial");
  int rep_ell = 0, rep_q = 0, rep_i = 0;
  reproduce->add_option("--ell", rep_ell, "building rank")->required()->check(CLI::PositiveNumber);
  reproduce->add_option("--q", rep_q, "field order")->required()->check(CLI::Range(2, 65535));
  reproduce->add_option("--i", rep_i, "cochain degree")->required()->check(CLI::NonNegativeNumber);

  auto* report = app.add_subcommand("report", "verify every instance of a grid");
  std::string grid = "default", out_path;
  report->add_option("--grid", grid, "default or extended")->check(CLI::IsMember({"default", "extended"}));
  report->add_option("--out", out_path, "JSON report path")->required();

  CLI11_PARSE(app, argc, argv);
  if (!cache_dir.empty()) options.cache_dir = cache_dir;

  try {
    if (*build) {
      options.budget = Budget::extended();
      Session s(options);
      const auto t = std::chrono::steady_clock::now();
      const auto b = s.building(build_ell, build_q);
      const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
      json j{{"instance", {{"ell", build_ell}, {"q", build_q}}}, {"counts", json::array()}};
      std::ostringstream text;
      text << "building ell=" << build_ell << " q=" << build_q << " (flags in F_" << build_q << "^" << build_ell + 2
           << ")\n";
      for (int i = 0; i <= b->complex.dimension(); ++i) {
        j["counts"].push_back(b->complex.count(i));
        text << "  " << i << "-simplices: " << b->complex.count(i) << "\n";
      }
      std::ostringstream hash;
      hash << std::hex << content_hash(b->complex);
      j["complex_hash"] = hash.str();
      j["timings"] = json{{"build_s", dt}};
      text << "  hash " << hash.str() << ", built in " << dt << " s\n";
      if (!emit_path.empty()) {
        write_file(emit_path, [&](std::ostream& out) { write_complex_text(out, b->complex); });
        text << "  wrote " << emit_path << "\n";
      }
      emit(j, text.str(), as_json);
      return 0;
    }

    if (*spectrum) {
      options.budget = Budget::extended();
      options.width = parse_width(width);
      if (sgn(options.width) <= 0) throw Error(ErrorCode::DimensionOutOfRange, "width must be positive");
      Session s(options);
      spec_target.load();
      auto r = spec_target.is_building() ? s.spectrum(spec_target.ell, spec_target.q, spec_i)
                                         : s.spectrum(spec_target.complex->complex, spec_i);
      r.verdicts = verify_spectrum_shape(r);
      if (spec_target.is_building()) r.verdicts.push_back(verify_integer_eigenvalues(r, spec_target.ell));
      if (!dump_path.empty()) {
        const Complex& c = spec_target.is_building() ? s.building(spec_target.ell, spec_target.q)->complex
                                                     : spec_target.complex->complex;
        const auto op = assemble_matrix(c, spec_i);
        write_file(dump_path, [&](std::ostream& out) { write_matrix_dump(out, *op.matrix, spec_i); });
      }
      emit(to_json(r), to_text(r), as_json);
      return 0;
    }

    if (*verify) {
      if (extended) options.budget = Budget::extended();
      Session s(options);
      ver_target.load();
      std::vector<int> degrees;
      if (ver_i) {
        degrees.push_back(*ver_i);
      } else {
        const int top = ver_target.is_building() ? ver_target.dimension() : ver_target.dimension() - 1;
        for (int i = 0; i <= top; ++i) degrees.push_back(i);
      }
      json all = json::array();
      std::string text;
      bool ok = true;
      for (int i : degrees) {
        const auto r = ver_target.is_building() ? verify_building(s, ver_target.ell, ver_target.q, i)
                                                : verify_complex(s, ver_target.complex->complex, i);
        ok = ok && all_true(r);
        all.push_back(to_json(r));
        if (ver_target.is_building() && i == ver_target.ell) {
          text += "degree " + std::to_string(i) + " is the top degree: threshold check for H^" + std::to_string(i) +
                  " from the spectrum on C^" + std::to_string(i - 1) + "\n";
        }
        text += to_text(r);
      }
      emit(all.size() == 1 ? all[0] : all, text, as_json);
      return ok ? 0 : 1;
    }

    if (*reproduce) {
      options.budget = Budget::extended();
      Session s(options);
      if (!paper_polynomial(rep_ell, rep_q, rep_i)) {
        throw Error(ErrorCode::UnknownPaperInstance, InstanceKey::building(rep_ell, rep_q, rep_i).label());
      }
      auto r = s.spectrum(rep_ell, rep_q, rep_i);
      r.paper = reproduce_paper_polynomial(r.minpoly, rep_ell, rep_q, rep_i);
      r.verdicts = {paper_verdict(r, *r.paper)};
      std::string text = to_text(r);
      text += "  published: " + r.paper->display + "\n";
      text += r.paper->match ? "  MATCH\n" : "  MISMATCH\n";
      emit(to_json(r), text, as_json);
      return r.paper->match ? 0 : 1;
    }

    if (*report) {
      const bool ext = grid == "extended";
      options.budget = ext ? Budget::extended() : Budget::default_grid();
      Session s(options);
      const auto j = run_report(s, ext ? Grid::Extended : Grid::Default);
      write_file(out_path, [&](std::ostream& out) { out << j.dump(2) << "\n"; });
      const auto& summary = j["summary"];
      std::ostringstream text;
      text << "grid " << grid << ": " << j["instances"].size() << " instances, " << summary["certified-true"]
           << " certified-true, " << summary["certified-false"] << " certified-false, "
           << summary["inconclusive-at-width"] << " inconclusive, " << summary["errors"] << " errors\n";
      for (const auto& f : summary["not_certified_true"]) {
        text << "  " << f["status"].get<std::string>() << ": " << f["theorem"].get<std::string>() << " ("
             << f["instance"].get<std::string>() << ")\n";
      }
      text << "wrote " << out_path << "\n";
      emit(summary, text.str(), as_json);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
