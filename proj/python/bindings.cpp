#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tcheck/closure.hpp"
#include "tcheck/graph.hpp"
#include "tcheck/io.hpp"
#include "tcheck/oracle.hpp"
#include "tcheck/workload.hpp"

namespace py = pybind11;

namespace {

using ArcPair = std::pair<std::uint32_t, std::uint32_t>;

std::vector<tcheck::Arc> to_arcs(const std::vector<ArcPair>& pairs) {
  std::vector<tcheck::Arc> arcs;
  arcs.reserve(pairs.size());
  for (const auto& [tail, head] : pairs) arcs.push_back(tcheck::Arc{tail, head});
  return arcs;
}

std::vector<ArcPair> from_arcs(std::span<const tcheck::Arc> arcs) {
  std::vector<ArcPair> pairs;
  pairs.reserve(arcs.size());
  for (const tcheck::Arc& a : arcs) pairs.emplace_back(a.tail, a.head);
  return pairs;
}

tcheck::EvolvingGraph make_graph(std::uint32_t n,
                                 const std::vector<std::vector<ArcPair>>& steps) {
  std::vector<std::vector<tcheck::Arc>> converted;
  converted.reserve(steps.size());
  for (const auto& step : steps) converted.push_back(to_arcs(step));
  return tcheck::EvolvingGraph(n, std::move(converted));
}

tcheck::GeneratorSpec make_spec(std::uint32_t n, std::size_t k, std::uint64_t seed,
                                std::optional<double> p, std::optional<std::size_t> mu) {
  if (p.has_value() == mu.has_value()) {
    throw std::invalid_argument("pass exactly one of p and mu");
  }
  tcheck::GeneratorSpec spec;
  spec.n = n;
  spec.k = k;
  spec.seed = seed;
  if (p) {
    spec.model = tcheck::GeneratorModel::per_step_bernoulli;
    spec.p = *p;
  } else {
    spec.model = tcheck::GeneratorModel::fixed_mu;
    spec.mu = *mu;
  }
  return spec;
}

}  // namespace

PYBIND11_MODULE(_tcheck, m) {
  m.doc() = "journey transitive closure and temporal connectivity of evolving graphs";

  py::enum_<tcheck::JourneySemantics>(m, "JourneySemantics")
      .value("strict", tcheck::JourneySemantics::strict)
      .value("non_strict", tcheck::JourneySemantics::non_strict);

  py::class_<tcheck::EvolvingGraph>(m, "EvolvingGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("steps"))
      .def_property_readonly("n", &tcheck::EvolvingGraph::vertex_count)
      .def_property_readonly("k", &tcheck::EvolvingGraph::step_count)
      .def("step",
           [](const tcheck::EvolvingGraph& g, std::size_t i) {
             if (i >= g.step_count()) throw py::index_error("step index out of range");
             return from_arcs(g.step(i));
           },
           py::arg("i"))
      .def("steps",
           [](const tcheck::EvolvingGraph& g) {
             std::vector<std::vector<ArcPair>> out;
             out.reserve(g.step_count());
             for (std::size_t i = 0; i < g.step_count(); ++i)
               out.push_back(from_arcs(g.step(i)));
             return out;
           })
      .def("prefix", &tcheck::EvolvingGraph::prefix, py::arg("t"))
      .def_property_readonly("dropped_self_loops",
                             &tcheck::EvolvingGraph::dropped_self_loops)
      .def(py::self == py::self)
      .def("__repr__", [](const tcheck::EvolvingGraph& g) {
        return "EvolvingGraph(n=" + std::to_string(g.vertex_count()) +
               ", k=" + std::to_string(g.step_count()) + ")";
      });

  py::class_<tcheck::DensityProfile>(m, "DensityProfile")
      .def_readonly("n", &tcheck::DensityProfile::n)
      .def_readonly("k", &tcheck::DensityProfile::k)
      .def_readonly("mu", &tcheck::DensityProfile::mu)
      .def_readonly("m", &tcheck::DensityProfile::m)
      .def("__repr__", [](const tcheck::DensityProfile& d) {
        return "DensityProfile(n=" + std::to_string(d.n) + ", k=" + std::to_string(d.k) +
               ", mu=" + std::to_string(d.mu) + ", m=" + std::to_string(d.m) + ")";
      });

  py::class_<tcheck::ClosureGraph>(m, "ClosureGraph")
      .def(py::init([](std::uint32_t n, const std::vector<ArcPair>& arcs) {
             return tcheck::ClosureGraph(n, to_arcs(arcs));
           }),
           py::arg("n"), py::arg("arcs"))
      .def_property_readonly("n", &tcheck::ClosureGraph::vertex_count)
      .def("arcs", [](const tcheck::ClosureGraph& c) { return from_arcs(c.arcs()); })
      .def("contains", &tcheck::ClosureGraph::contains, py::arg("tail"), py::arg("head"))
      .def_property_readonly("is_complete", &tcheck::ClosureGraph::is_complete)
      .def(py::self == py::self)
      .def("__len__", [](const tcheck::ClosureGraph& c) { return c.arcs().size(); })
      .def("__repr__", [](const tcheck::ClosureGraph& c) {
        return "ClosureGraph(n=" + std::to_string(c.vertex_count()) + ", arcs=" +
               std::to_string(c.arcs().size()) + ")";
      });

  py::class_<tcheck::ConnectivityReport>(m, "ConnectivityReport")
      .def_readonly("closure", &tcheck::ConnectivityReport::closure)
      .def_readonly("connected", &tcheck::ConnectivityReport::connected)
      .def_readonly("completed_at_step", &tcheck::ConnectivityReport::completed_at_step)
      .def("__repr__", [](const tcheck::ConnectivityReport& r) {
        std::string out = "ConnectivityReport(connected=";
        out += r.connected ? "True" : "False";
        if (r.completed_at_step) {
          out += ", completed_at_step=" + std::to_string(*r.completed_at_step);
        }
        return out + ")";
      });

  m.def("density_profile",
        [](const tcheck::EvolvingGraph& g) { return tcheck::density_profile(g); },
        py::arg("graph"));

  m.def("compute_closure", &tcheck::compute_closure, py::arg("graph"),
        py::arg("semantics") = tcheck::JourneySemantics::strict);
  m.def("strict_closure", &tcheck::strict_closure, py::arg("graph"));
  m.def("nonstrict_closure", &tcheck::nonstrict_closure, py::arg("graph"));
  m.def("is_temporally_connected", &tcheck::is_temporally_connected, py::arg("graph"),
        py::arg("semantics") = tcheck::JourneySemantics::strict);
  m.def("journey_exists", &tcheck::journey_exists, py::arg("closure"), py::arg("u"),
        py::arg("v"));

  m.def("oracle_closure", &tcheck::oracle_closure, py::arg("graph"), py::arg("semantics"),
        py::arg("node_cap") = tcheck::TimeExpandedGraph::kDefaultNodeCap);
  m.def("enumerate_journeys", &tcheck::enumerate_journeys, py::arg("graph"),
        py::arg("semantics"), py::arg("u"), py::arg("v"), py::arg("max_arcs") = 8);

  m.def("parse_teg",
        [](const std::string& text, const std::string& name) {
          return tcheck::parse_teg_text(text, name);
        },
        py::arg("text"), py::arg("name") = "<string>");
  m.def("serialize_teg", &tcheck::serialize_teg, py::arg("graph"));
  m.def("parse_closure",
        [](const std::string& text, const std::string& name) {
          return tcheck::parse_closure_text(text, name);
        },
        py::arg("text"), py::arg("name") = "<string>");
  m.def("serialize_closure", &tcheck::serialize_closure, py::arg("report"));

  m.def("generate",
        [](std::uint32_t n, std::size_t k, std::uint64_t seed, std::optional<double> p,
           std::optional<std::size_t> mu) {
          return tcheck::generate(make_spec(n, k, seed, p, mu));
        },
        py::arg("n"), py::arg("k"), py::arg("seed"), py::arg("p") = py::none(),
        py::arg("mu") = py::none());

  py::register_exception<tcheck::ParseError>(m, "ParseError", PyExc_ValueError);
}
