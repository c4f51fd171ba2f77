#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "garland/error.hpp"
#include "garland/harness.hpp"

namespace py = pybind11;
using namespace garland;
using namespace garland::harness;

namespace {

// Exact values cross the boundary as "num/den" strings and JSON text; the
// Python layer turns them into Fractions and dicts.
std::vector<std::string> exact_strings(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_exact_string(x));
  return out;
}

RatPolynomial from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rational> c;
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return RatPolynomial(std::move(c));
}

std::vector<std::vector<VertexId>> simplices(const Complex& c) {
  std::vector<std::vector<VertexId>> out;
  for (const auto& s : c.maximal_simplices()) out.emplace_back(s.begin(), s.end());
  return out;
}

SessionOptions session_options(std::optional<std::string> cache_dir, int threads, std::uint64_t seed,
                               const std::string& width, bool extended) {
  SessionOptions o;
  if (cache_dir) o.cache_dir = *cache_dir;
  o.threads = threads;
  o.seed = seed;
  o.width = parse_rational(width);
  o.budget = extended ? Budget::extended() : Budget::default_grid();
  return o;
}

}  // namespace

PYBIND11_MODULE(_garland, m) {
  m.doc() = "Exact spectra of Garland's Laplacian on finite buildings";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "GarlandError", PyExc_ValueError);

  py::class_<Complex>(m, "Complex")
      .def(py::init([](std::vector<std::vector<VertexId>> tops) { return Complex::from_maximal_simplices(std::move(tops)); }),
           py::arg("maximal_simplices"))
      .def_property_readonly("dimension", &Complex::dimension)
      .def("count", &Complex::count, py::arg("i"))
      .def("simplices", [](const Complex& c, int i) {
        std::vector<std::vector<VertexId>> out;
        for (std::size_t k = 0; k < c.count(i); ++k) out.push_back(c.simplex_copy(i, k));
        return out;
      }, py::arg("i"))
      .def("weights", &Complex::weights, py::arg("i"))
      .def("maximal_simplices", &simplices)
      .def_property_readonly("hash", [](const Complex& c) {
        std::ostringstream h;
        h << std::hex << content_hash(c);
        return h.str();
      })
      .def("to_text", [](const Complex& c) {
        std::ostringstream out;
        write_complex_text(out, c);
        return out.str();
      })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return parse_complex_text(in).complex;
      }, py::arg("text"));

  m.def("full_simplex", &full_simplex, py::arg("n"));
  m.def("flag_complex", [](int ell, int q) {
    std::optional<TypedBuilding> b;
    {
      py::gil_scoped_release release;
      b = flag_complex(ell, gf::make_field_of_order(q));
    }
    return py::make_tuple(std::move(b->complex), b->types);
  }, py::arg("ell"), py::arg("q"),
        "(complex, types): the flag complex of F_q^(ell+2) and the vertex types.");
  m.def("link", [](const Complex& c, std::vector<VertexId> s) {
    auto lk = link(c, s);
    return py::make_tuple(std::move(lk.complex), lk.to_parent);
  }, py::arg("complex"), py::arg("simplex"));

  m.def("laplacian_entries", [](const Complex& c, int i) {
    const auto op = assemble_matrix(c, i);
    const auto& a = *op.matrix;
    std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
    for (std::size_t r = 0; r < a.rows; ++r) {
      for (std::size_t k = a.row_start[r]; k < a.row_start[r + 1]; ++k) out.emplace_back(r, a.col[k], to_exact_string(a.value[k]));
    }
    return out;
  }, py::arg("complex"), py::arg("i"));
  m.def("apply_laplacian", [](const Complex& c, int i, const std::vector<std::string>& values) {
    Cochain f{i, {}};
    for (const auto& v : values) f.values.push_back(parse_rational(v));
    return exact_strings(laplacian_apply(c, f).values);
  }, py::arg("complex"), py::arg("i"), py::arg("values"));
  m.def("minimal_polynomial", [](const Complex& c, int i, std::uint64_t seed) {
    MinimalPolynomialOptions o;
    o.seed = seed;
    return exact_strings(minimal_polynomial(assemble_matrix(c, i), c.count(i), o).coeffs());
  }, py::arg("complex"), py::arg("i"), py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
  m.def("isolate_real_roots", [](const std::vector<std::string>& coeffs, const std::string& width) {
    const auto iso = isolate_real_roots(from_strings(coeffs), parse_rational(width));
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : iso.roots) j.push_back(to_json(r));
    return j.dump();
  }, py::arg("coeffs"), py::arg("width"));
  m.def("paper_polynomial", [](int ell, int q, int i) -> std::optional<std::vector<std::string>> {
    const auto p = paper_polynomial(ell, q, i);
    if (!p) return std::nullopt;
    return exact_strings(p->expanded().coeffs());
  }, py::arg("ell"), py::arg("q"), py::arg("i"));

  py::class_<Session>(m, "Session")
      .def(py::init([](std::optional<std::string> cache_dir, int threads, std::uint64_t seed, const std::string& width,
                       bool extended) { return std::make_unique<Session>(session_options(cache_dir, threads, seed, width, extended)); }),
           py::arg("cache_dir") = std::nullopt, py::arg("threads") = 1, py::arg("seed") = 0,
           py::arg("width") = "1/1000000", py::arg("extended") = false)
      .def("spectrum", [](Session& s, int ell, int q, int i) { return to_json(s.spectrum(ell, q, i)).dump(); },
           py::arg("ell"), py::arg("q"), py::arg("i"), py::call_guard<py::gil_scoped_release>())
      .def("spectrum_complex", [](Session& s, const Complex& c, int i) { return to_json(s.spectrum(c, i)).dump(); },
           py::arg("complex"), py::arg("i"), py::call_guard<py::gil_scoped_release>())
      .def("verify", [](Session& s, int ell, int q, int i) { return to_json(verify_building(s, ell, q, i)).dump(); },
           py::arg("ell"), py::arg("q"), py::arg("i"), py::call_guard<py::gil_scoped_release>())
      .def("verify_complex", [](Session& s, const Complex& c, int i) { return to_json(verify_complex(s, c, i)).dump(); },
           py::arg("complex"), py::arg("i"), py::call_guard<py::gil_scoped_release>())
      .def("report", [](Session& s, const std::string& grid) {
        if (grid != "default" && grid != "extended") throw Error(ErrorCode::ParseError, "grid must be default or extended");
        return run_report(s, grid == "default" ? Grid::Default : Grid::Extended).dump();
      }, py::arg("grid") = "default", py::call_guard<py::gil_scoped_release>());
}
