// Thin JSON-string bindings; the Python package converts to and from dicts.

#include <pybind11/pybind11.h>
#include <pybind11/complex.h>
#include <pybind11/stl.h>

#include <sstream>

#include "looptx/cli.hpp"
#include "looptx/errors.hpp"
#include "looptx/json_io.hpp"
#include "looptx/suites.hpp"

namespace py = pybind11;
using namespace looptx;

namespace {

Json parse(const std::string& s) { return Json::parse(s); }

std::string generators(const std::string& graph) {
  Graph g = graph_from_json(parse(graph));
  return to_json(g, spanning_tree_generators(g)).dump();
}

std::string decompose_word(const std::string& graph, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  return to_json(decompose(g, word_from_json(g, parse(word)), spanning_tree_generators(g))).dump();
}

HoopVector abelianize_word(const std::string& graph, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  return abelianize(g, word_from_json(g, parse(word)), spanning_tree_generators(g));
}

bool kernel_test_word(const std::string& graph, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  return kernel_test(g, word_from_json(g, parse(word)), spanning_tree_generators(g));
}

HoopVector path_abelianize_word(const std::string& graph, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  return path_abelianize(g, word_from_json(g, parse(word)));
}

std::string holonomy_of(const std::string& graph, const std::string& connection, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  Connection a = connection_from_json(g, parse(connection));
  return to_json(holonomy(a, word_from_json(g, parse(word)))).dump();
}

Complex wilson_of(const std::string& graph, const std::string& connection, const std::string& word) {
  Graph g = graph_from_json(parse(graph));
  Connection a = connection_from_json(g, parse(connection));
  return wilson(a, word_from_json(g, parse(word)));
}

std::string interpolate_targets(const std::string& graph, const std::string& group,
                                const std::string& targets) {
  Graph g = graph_from_json(parse(graph));
  GaugeGroup grp = group_from_string(group);
  std::vector<GroupElement> elements;
  for (const Json& t : parse(targets)) elements.push_back(group_element_from_json(grp, t));
  return to_json(interpolate(g, spanning_tree_generators(g), elements)).dump();
}

std::string transform(const std::string& cylinder) {
  return to_json(loop_transform(cylinder_from_json(parse(cylinder)))).dump();
}

std::string inverse_state(const std::string& state) {
  return to_json(inverse_transform(loop_state_from_json(parse(state)))).dump();
}

std::string fourier_of(const std::string& poly) { return to_json(fourier(trig_poly_from_json(parse(poly)))).dump(); }

std::string fft_of(const std::string& poly, std::size_t grid) {
  return to_json(fft_oracle(trig_poly_from_json(parse(poly)), grid)).dump();
}

double psd_of(const std::string& density, const std::vector<HoopVector>& window) {
  return psd_test(functional_from_density(density_from_json(parse(density))), window);
}

py::tuple grid_min_of(const std::string& density, std::size_t grid) {
  MeasureDensity p = density_from_json(parse(density));
  std::vector<std::size_t> sizes(p.density().dim(), grid);
  GridMinimum m = grid_minimum(p, sizes);
  return py::make_tuple(m.value, m.theta);
}

std::optional<std::vector<std::vector<std::int64_t>>> refinement(const std::string& coarse,
                                                                 const std::string& fine) {
  auto k = refinement_matrix(level_from_json(parse(coarse)), level_from_json(parse(fine)));
  if (!k) return std::nullopt;
  return to_json(k->entries).get<std::vector<std::vector<std::int64_t>>>();
}

std::string join(const std::string& a, const std::string& b) {
  return to_json(join_levels(level_from_json(parse(a)), level_from_json(parse(b)))).dump();
}

std::optional<HoopVector> solve(const std::vector<HoopVector>& columns, std::size_t rows, const HoopVector& target) {
  return hnf_solve(IntMatrix::from_columns(rows, columns), target);
}

py::list suites(std::uint64_t seed, double scale) {
  py::list out;
  for (const SuiteResult& s : run_all_suites({seed, scale})) {
    py::list checks;
    for (const CheckResult& c : s.checks) {
      checks.append(py::dict(py::arg("name") = c.name, py::arg("value") = c.value,
                             py::arg("tolerance") = c.tolerance, py::arg("pass") = c.pass));
    }
    out.append(py::dict(py::arg("criterion") = s.criterion, py::arg("name") = s.name,
                        py::arg("seconds") = s.seconds, py::arg("budget_seconds") = s.budget_seconds,
                        py::arg("passed") = s.passed() && s.within_budget(), py::arg("checks") = checks));
  }
  return out;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_looptx, m) {
  m.doc() = "Abelian loop transform core (JSON-string interface)";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<CompositionError>(m, "CompositionError", PyExc_ValueError);
  py::register_exception<RefinementError>(m, "RefinementError", PyExc_ValueError);
  py::register_exception<AliasingError>(m, "AliasingError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);

  m.def("generators", &generators, py::arg("graph"));
  m.def("decompose", &decompose_word, py::arg("graph"), py::arg("word"));
  m.def("abelianize", &abelianize_word, py::arg("graph"), py::arg("word"));
  m.def("kernel_test", &kernel_test_word, py::arg("graph"), py::arg("word"));
  m.def("path_abelianize", &path_abelianize_word, py::arg("graph"), py::arg("word"));
  m.def("holonomy", &holonomy_of, py::arg("graph"), py::arg("connection"), py::arg("word"));
  m.def("wilson", &wilson_of, py::arg("graph"), py::arg("connection"), py::arg("word"));
  m.def("interpolate", &interpolate_targets, py::arg("graph"), py::arg("group"), py::arg("targets"));
  m.def("loop_transform", &transform, py::arg("cylinder"));
  m.def("inverse_transform", &inverse_state, py::arg("state"));
  m.def("fourier", &fourier_of, py::arg("poly"));
  m.def("fft_oracle", &fft_of, py::arg("poly"), py::arg("grid"));
  m.def("psd_test", &psd_of, py::arg("density"), py::arg("window"));
  m.def("grid_minimum", &grid_min_of, py::arg("density"), py::arg("grid"));
  m.def("refinement_matrix", &refinement, py::arg("coarse"), py::arg("fine"));
  m.def("join_levels", &join, py::arg("a"), py::arg("b"));
  m.def("hnf_solve", &solve, py::arg("columns"), py::arg("rows"), py::arg("target"));
  m.def("run_suites", &suites, py::arg("seed") = kDefaultSeed, py::arg("scale") = 1.0);
  m.def("cli", &run_cli, py::arg("args"));
}
