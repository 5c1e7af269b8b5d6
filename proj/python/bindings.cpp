#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "effdim/dimension.hpp"
#include "effdim/json_io.hpp"
#include "effdim/oracle.hpp"

namespace py = pybind11;
using namespace effdim;

namespace {

LabelField label_field(const std::string& name) {
  if (name == "primes") return LabelField::primes;
  if (name == "transcendental") return LabelField::transcendental;
  throw std::invalid_argument("labels must be 'primes' or 'transcendental'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Effective dimensions of quiver path semigroups";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_ValueError);

  py::class_<Quiver>(m, "Quiver")
      .def(py::init<std::vector<std::string>, std::vector<Arrow>>())
      .def_property_readonly("vertices", [](const Quiver& q) { return q.vertices(); })
      .def_property_readonly("arrows",
                             [](const Quiver& q) {
                               std::vector<std::tuple<std::string, std::string, std::string>> out;
                               for (const auto& a : q.arrows())
                                 out.emplace_back(a.name, q.vertex_name(a.tail), q.vertex_name(a.head));
                               return out;
                             })
      .def("__len__", &Quiver::vertex_count)
      .def("__eq__", [](const Quiver& a, const Quiver& b) { return a == b; })
      .def("to_text", [](const Quiver& q) { return to_text(q); })
      .def("__repr__", [](const Quiver& q) {
        return "<Quiver with " + std::to_string(q.vertex_count()) + " vertices and " +
               std::to_string(q.arrow_count()) + " arrows>";
      });

  py::class_<Arrow>(m, "Arrow")
      .def(py::init<std::string, VertexId, VertexId>(), py::arg("name"), py::arg("tail"), py::arg("head"))
      .def_readonly("name", &Arrow::name)
      .def_readonly("tail", &Arrow::tail)
      .def_readonly("head", &Arrow::head);

  m.def("parse_quiver", [](const std::string& text) { return parse_quiver(text); }, py::arg("text"));
  m.def("load_quiver", &load_quiver, py::arg("path"));

  m.def("effdim_path", &effdim_path, py::arg("quiver"));
  m.def("effdim_truncated", &effdim_truncated, py::arg("quiver"), py::arg("N"));
  m.def("is_commutative_at", &is_commutative_at, py::arg("quiver"), py::arg("vertex"));
  m.def(
      "stabilization",
      [](const Quiver& q) {
        const auto s = stabilization(q);
        return py::make_tuple(s.a, s.b, s.threshold);
      },
      py::arg("quiver"), "(a, b, threshold) with eff.dim(P_N) = a*N + b for N >= threshold");
  m.def(
      "an_closed_form", [](const std::vector<std::size_t>& segments, std::size_t n) { return an_closed_form(segments, n); },
      py::arg("segments"), py::arg("N"));
  m.def("an_segments", &an_segments, py::arg("quiver"));

  // Structured results cross the boundary as JSON text; the Python side decodes them.
  m.def(
      "_analysis_json",
      [](const Quiver& q, std::optional<std::size_t> n) { return analysis_json(q, n).dump(); },
      py::arg("quiver"), py::arg("N") = py::none());
  m.def(
      "_construct_json",
      [](const Quiver& q, std::optional<std::size_t> n, const std::string& labels) {
        if (n) return to_json(q, build_truncated_rep(q, *n, label_field(labels))).dump();
        return to_json(q, build_path_rep(q)).dump();
      },
      py::arg("quiver"), py::arg("N") = py::none(), py::arg("labels") = "primes");
  m.def(
      "_verify_json",
      [](const Quiver& q, std::optional<std::size_t> n, std::optional<std::size_t> max_len, unsigned threads,
         std::uint64_t seed) {
        py::gil_scoped_release release;
        VerifyReport report;
        if (n) {
          report = verify_truncated(build_truncated_rep(q, *n), q, *n);
        } else {
          report = verify_path_rep(build_path_rep(q), q, max_len.value_or(2 * q.vertex_count() + 2), {threads, seed});
        }
        return to_json(q, report).dump();
      },
      py::arg("quiver"), py::arg("N") = py::none(), py::arg("max_len") = py::none(), py::arg("threads") = 1,
      py::arg("seed") = VerifyOptions{}.seed);
  m.def("_verify_rep_json",
        [](const Quiver& q, const std::string& doc) {
          const auto rep = rep_from_json(q, json::parse(doc));
          VerifyReport report;
          if (const auto* g = std::get_if<GradedRep>(&rep))
            report = verify_truncated(*g, q, g->truncation);
          else
            report = verify_path_rep(std::get<SymbolicRep>(rep), q, 2 * q.vertex_count() + 2);
          return to_json(q, report).dump();
        },
        py::arg("quiver"), py::arg("document"));
  m.def("exhaustive_lower_bound_f2", &exhaustive_lower_bound_f2, py::arg("quiver"), py::arg("N"), py::arg("total_dim"));
}
