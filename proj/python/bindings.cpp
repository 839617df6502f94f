#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vlink/complement.hpp"
#include "vlink/decider.hpp"
#include "vlink/json_io.hpp"
#include "vlink/surface.hpp"

namespace py = pybind11;
using namespace vlink;

namespace {

Budget budget_for(std::size_t largest, std::optional<std::size_t> max_crossings, std::size_t max_expansions,
                  unsigned threads) {
  return Budget{max_crossings.value_or(largest + 4), max_expansions, threads};
}

}  // namespace

PYBIND11_MODULE(_vlink, m) {
  m.doc() = "Virtual link diagrams given by Gauss codes";

  // Structured results cross the boundary as JSON text; the Python package
  // decodes them.
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<SurfaceError>(m, "SurfaceError", PyExc_ValueError);

  m.def("normalize", [](const std::string& text) { return serialize_gauss(parse_gauss(text)); });
  m.def("normal_key", [](const std::string& text) { return normal_key(parse_gauss(text)); });
  m.def("crossing_count", [](const std::string& text) { return parse_gauss(text).crossing_count(); });
  m.def("component_count", [](const std::string& text) { return parse_gauss(text).component_count(); });
  m.def("genus", [](const std::string& text) { return supporting_genus(carter_embed(parse_gauss(text))); });
  m.def(
      "fingerprint_json",
      [](const std::string& text, unsigned threads) {
        auto c = parse_gauss(text);
        py::gil_scoped_release release;
        return to_json(fingerprint(c, threads)).dump();
      },
      py::arg("code"), py::arg("threads") = 1);
  m.def("f_polynomial", [](const std::string& text) { return f_polynomial(parse_gauss(text)).to_string(); });
  m.def(
      "decide_json",
      [](const std::string& a, const std::string& b, std::optional<std::size_t> max_crossings,
         std::size_t max_expansions, unsigned threads) {
        auto ca = parse_gauss(a), cb = parse_gauss(b);
        auto budget = budget_for(std::max(ca.crossing_count(), cb.crossing_count()), max_crossings, max_expansions, threads);
        py::gil_scoped_release release;
        return to_json(decide(ca, cb, budget)).dump();
      },
      py::arg("a"), py::arg("b"), py::arg("max_crossings") = py::none(), py::arg("max_expansions") = 200000,
      py::arg("threads") = 1);
  m.def(
      "canonical_minimum_json",
      [](const std::string& text, std::optional<std::size_t> max_crossings, std::size_t max_expansions,
         unsigned threads) {
        auto c = parse_gauss(text);
        auto budget = budget_for(c.crossing_count(), max_crossings, max_expansions, threads);
        py::gil_scoped_release release;
        auto r = canonical_minimum(c, budget);
        return Json{{"code", serialize_gauss(r.code)},
                    {"genus", r.genus},
                    {"exhausted", r.exhausted},
                    {"visited", r.visited},
                    {"trace", to_json(r.trace)}}
            .dump();
      },
      py::arg("code"), py::arg("max_crossings") = py::none(), py::arg("max_expansions") = 200000,
      py::arg("threads") = 1);
  m.def("complement_json", [](const std::string& text) {
    auto [c, p] = build_complement(destabilize_fully(carter_embed(parse_gauss(text))));
    return export_complex(c, p);
  });
  m.def("check_certificate_json", [](const std::string& a, const std::string& b, const std::string& certificate) {
    auto j = Json::parse(certificate);
    EquivalenceCertificate cert{trace_from_json(j.at("from_a")), trace_from_json(j.at("from_b")),
                                parse_gauss(j.at("meeting").get<std::string>())};
    return check_certificate(parse_gauss(a), parse_gauss(b), cert).ok;
  });
}
