#include "looptx/json_io.hpp"

#include "looptx/errors.hpp"

namespace looptx {

namespace {

template <class Series>
Series series_from_json(const Json& j, const char* key, const char* index_key) {
  Series s(j.at("dim").get<std::size_t>());
  for (const Json& term : j.at(key)) {
    s.add_term(term.at(index_key).get<HoopVector>(),
               Complex(term.value("re", 0.0), term.value("im", 0.0)));
  }
  return s;
}

template <class Series>
Json series_terms(const Series& s, const char* index_key) {
  Json terms = Json::array();
  for (const auto& [k, c] : s.coeffs()) {
    terms.push_back({{index_key, k}, {"re", c.real()}, {"im", c.imag()}});
  }
  return terms;
}

}  // namespace

Graph graph_from_json(const Json& j) {
  std::vector<Graph::EdgeSpec> edges;
  for (const Json& e : j.at("edges")) {
    edges.push_back({e.at("id").get<std::string>(), e.at("from").get<std::string>(),
                     e.at("to").get<std::string>()});
  }
  return Graph(j.at("vertices").get<std::vector<std::string>>(), std::move(edges),
               j.at("base").get<std::string>());
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"id", e.id}, {"from", g.vertices()[e.source]}, {"to", g.vertices()[e.target]}});
  }
  return {{"vertices", g.vertices()}, {"base", g.vertices()[g.base()]}, {"edges", edges}};
}

Word word_from_json(const Graph& g, const Json& j) {
  const std::string kind = j.value("kind", std::string("loop"));
  std::vector<Step> steps;
  for (const Json& token : j.at("steps")) steps.push_back(parse_step(g, token.get<std::string>()));
  if (kind == "loop") return reduce(g, make_loop(g, std::move(steps)));
  if (kind != "path") throw StructuralError("word kind must be 'loop' or 'path'");
  std::optional<VertexIndex> start;
  if (j.contains("start")) {
    start = g.find_vertex(j.at("start").get<std::string>());
    if (!start) throw StructuralError("unknown start vertex");
  }
  return reduce(g, make_path(g, std::move(steps), start));
}

Json to_json(const Graph& g, const Word& w) {
  Json steps = Json::array();
  for (const Step& s : w.steps) steps.push_back(format_step(g, s));
  Json j = {{"kind", w.kind == WordKind::loop ? "loop" : "path"}, {"steps", steps}};
  if (w.kind == WordKind::path) j["start"] = g.vertices()[w.start];
  return j;
}

Json to_json(const Graph& g, const GeneratorBasis& basis) {
  Json tree = Json::array();
  Json chords = Json::array();
  Json gens = Json::array();
  for (EdgeIndex e : basis.tree) tree.push_back(g.edge(e).id);
  for (EdgeIndex e : basis.chords) chords.push_back(g.edge(e).id);
  for (const Word& w : basis.generators) gens.push_back(to_json(g, w));
  return {{"tree", tree}, {"chords", chords}, {"generators", gens}, {"rank", basis.rank()}};
}

Json to_json(const GeneratorWord& w) {
  Json out = Json::array();
  for (const GeneratorLetter& l : w) {
    out.push_back((l.sign < 0 ? "~b" : "b") + std::to_string(l.index + 1));
  }
  return out;
}

GaugeGroup group_from_string(const std::string& s) {
  if (s == "U1") return GaugeGroup::u1;
  if (s == "SU2") return GaugeGroup::su2;
  throw ArgumentError("unknown group '" + s + "' (expected U1 or SU2)");
}

std::string to_string(GaugeGroup group) { return group == GaugeGroup::u1 ? "U1" : "SU2"; }

GroupElement group_element_from_json(GaugeGroup group, const Json& j) {
  if (group == GaugeGroup::u1) return U1Element(j.get<double>());
  if (!j.is_array() || j.size() != 4) throw ArgumentError("SU2 element needs 4 [re,im] entries");
  Eigen::Matrix2cd m;
  for (int i = 0; i < 4; ++i) {
    const Json& entry = j.at(static_cast<std::size_t>(i));
    m(i / 2, i % 2) = Complex(entry.at(0).get<double>(), entry.at(1).get<double>());
  }
  return SU2Element(m);
}

Json to_json(const GroupElement& g) {
  if (auto* u = std::get_if<U1Element>(&g)) return u->angle();
  const Eigen::Matrix2cd& m = std::get<SU2Element>(g).matrix();
  Json out = Json::array();
  for (int i = 0; i < 4; ++i) out.push_back({m(i / 2, i % 2).real(), m(i / 2, i % 2).imag()});
  return out;
}

Connection connection_from_json(const Graph& g, const Json& j) {
  GaugeGroup group = group_from_string(j.at("group").get<std::string>());
  const Json& assignment = j.at("assignment");
  std::vector<GroupElement> values;
  values.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (!assignment.contains(e.id)) throw ArgumentError("no group element for edge '" + e.id + "'");
    values.push_back(group_element_from_json(group, assignment.at(e.id)));
  }
  if (assignment.size() != g.edge_count()) {
    throw ArgumentError("connection assigns elements to edges not in the graph");
  }
  return Connection(g, group, std::move(values));
}

Json to_json(const Connection& a) {
  Json assignment = Json::object();
  for (EdgeIndex e = 0; e < a.graph().edge_count(); ++e) {
    assignment[a.graph().edge(e).id] = to_json(a.at(e));
  }
  return {{"group", to_string(a.group())}, {"assignment", assignment}};
}

Json complex_to_json(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

TrigPoly trig_poly_from_json(const Json& j) { return series_from_json<TrigPoly>(j, "coeffs", "k"); }

Json to_json(const TrigPoly& p) { return {{"dim", p.dim()}, {"coeffs", series_terms(p, "k")}}; }

CoeffFunction coeff_function_from_json(const Json& j) {
  return series_from_json<CoeffFunction>(j, j.contains("values") ? "values" : "coeffs", "k");
}

Json to_json(const CoeffFunction& c) {
  return {{"dim", c.dim()}, {"values", series_terms(c, "k")}};
}

Level level_from_json(const Json& j) {
  return Level(j.at("ambient").get<std::size_t>(), j.at("basis").get<std::vector<HoopVector>>());
}

Json to_json(const Level& level) {
  return {{"ambient", level.ambient()}, {"basis", level.basis()}};
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    HoopVector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = m(r, c);
    rows.push_back(row);
  }
  return rows;
}

CylinderFunction cylinder_from_json(const Json& j) {
  return CylinderFunction(level_from_json(j.at("level")), trig_poly_from_json(j.at("poly")));
}

Json to_json(const CylinderFunction& psi) {
  return {{"level", to_json(psi.level())}, {"poly", to_json(psi.poly())}};
}

LoopState loop_state_from_json(const Json& j) {
  LoopState s(j.at("ambient").get<std::size_t>());
  for (const Json& term : j.at("support")) {
    s.add_term(term.at("h").get<HoopVector>(),
               Complex(term.value("re", 0.0), term.value("im", 0.0)));
  }
  return s;
}

Json to_json(const LoopState& state) {
  return {{"ambient", state.dim()}, {"support", series_terms(state, "h")}};
}

MeasureDensity density_from_json(const Json& j) { return MeasureDensity(trig_poly_from_json(j)); }

Json to_json(const MeasureDensity& p) {
  Json j = to_json(p.density());
  j["hermitian"] = true;
  return j;
}

CharacterFunctional functional_from_json(const Json& j) {
  return series_from_json<CharacterFunctional>(j, j.contains("values") ? "values" : "coeffs", "k");
}

Json to_json(const CharacterFunctional& f) {
  return {{"dim", f.dim()}, {"values", series_terms(f, "k")}};
}

}  // namespace looptx
