#include "looptx/graph.hpp"

#include <algorithm>
#include <deque>

#include "looptx/errors.hpp"

namespace looptx {

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
             const std::string& base)
    : vertices_(std::move(vertices)) {
  for (VertexIndex v = 0; v < vertices_.size(); ++v) {
    if (!vertex_lookup_.emplace(vertices_[v], v).second) {
      throw StructuralError("duplicate vertex '" + vertices_[v] + "'");
    }
  }
  auto base_it = vertex_lookup_.find(base);
  if (base_it == vertex_lookup_.end()) {
    throw StructuralError("base vertex '" + base + "' is not declared");
  }
  base_ = base_it->second;

  incident_.resize(vertices_.size());
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    auto from = vertex_lookup_.find(spec.from);
    auto to = vertex_lookup_.find(spec.to);
    if (from == vertex_lookup_.end() || to == vertex_lookup_.end()) {
      throw StructuralError("edge '" + spec.id + "' has an undeclared endpoint");
    }
    if (spec.id.empty() || spec.id.front() == '~') {
      throw StructuralError("edge id '" + spec.id + "' is not a valid identifier");
    }
    EdgeIndex e = edges_.size();
    if (!edge_lookup_.emplace(spec.id, e).second) {
      throw StructuralError("duplicate edge id '" + spec.id + "'");
    }
    edges_.push_back({std::move(spec.id), from->second, to->second});
    incident_[from->second].push_back(e);
    if (to->second != from->second) incident_[to->second].push_back(e);
  }
  if (!is_connected()) throw StructuralError("graph is not connected");
}

std::optional<VertexIndex> Graph::find_vertex(const std::string& name) const {
  auto it = vertex_lookup_.find(name);
  if (it == vertex_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(const std::string& id) const {
  auto it = edge_lookup_.find(id);
  if (it == edge_lookup_.end()) return std::nullopt;
  return it->second;
}

bool Graph::is_connected() const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<VertexIndex> stack{base_};
  seen[base_] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexIndex v = stack.back();
    stack.pop_back();
    for (EdgeIndex e : incident_[v]) {
      VertexIndex u = edges_[e].source == v ? edges_[e].target : edges_[e].source;
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertices_.size();
}

VertexIndex step_source(const Graph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.orientation > 0 ? e.source : e.target;
}

VertexIndex step_target(const Graph& g, const Step& s) {
  const Edge& e = g.edge(s.edge);
  return s.orientation > 0 ? e.target : e.source;
}

void validate(const Graph& g, const Word& w) {
  if (w.start >= g.vertex_count()) throw StructuralError("word starts at an unknown vertex");
  if (w.kind == WordKind::loop && w.start != g.base()) {
    throw StructuralError("loop does not start at the base vertex");
  }
  VertexIndex at = w.start;
  for (std::size_t i = 0; i < w.steps.size(); ++i) {
    const Step& s = w.steps[i];
    if (s.edge >= g.edge_count()) throw StructuralError("word references an unknown edge");
    if (s.orientation != 1 && s.orientation != -1) {
      throw StructuralError("step orientation must be +1 or -1");
    }
    if (step_source(g, s) != at) {
      throw StructuralError("endpoint mismatch at step " + std::to_string(i) + " (" +
                            format_step(g, s) + ")");
    }
    at = step_target(g, s);
  }
  if (w.kind == WordKind::loop && at != g.base()) {
    throw StructuralError("loop does not return to the base vertex");
  }
}

VertexIndex word_end(const Graph& g, const Word& w) {
  return w.steps.empty() ? w.start : step_target(g, w.steps.back());
}

Word constant_loop(const Graph& g) { return Word{WordKind::loop, g.base(), {}}; }

Word empty_path(VertexIndex at) { return Word{WordKind::path, at, {}}; }

Word make_loop(const Graph& g, std::vector<Step> steps) {
  Word w{WordKind::loop, g.base(), std::move(steps)};
  validate(g, w);
  return w;
}

Word make_path(const Graph& g, std::vector<Step> steps, std::optional<VertexIndex> start) {
  VertexIndex from = 0;
  if (start) {
    from = *start;
  } else if (!steps.empty() && steps.front().edge < g.edge_count()) {
    from = step_source(g, steps.front());
  } else if (steps.empty()) {
    throw StructuralError("an empty path needs an explicit start vertex");
  }
  Word w{WordKind::path, from, std::move(steps)};
  validate(g, w);
  return w;
}

Word reduce(const Graph& g, const Word& w) {
  validate(g, w);
  Word out{w.kind, w.start, {}};
  out.steps.reserve(w.steps.size());
  for (const Step& s : w.steps) {
    if (!out.steps.empty() && out.steps.back() == s.inverse()) {
      out.steps.pop_back();
    } else {
      out.steps.push_back(s);
    }
  }
  return out;
}

bool is_reduced(const Word& w) {
  return std::adjacent_find(w.steps.begin(), w.steps.end(), [](const Step& a, const Step& b) {
           return b == a.inverse();
         }) == w.steps.end();
}

Word compose(const Graph& g, const Word& w1, const Word& w2) {
  validate(g, w1);
  validate(g, w2);
  if (word_end(g, w1) != w2.start) {
    throw CompositionError("cannot compose: first word ends at '" +
                           g.vertices()[word_end(g, w1)] + "', second starts at '" +
                           g.vertices()[w2.start] + "'");
  }
  WordKind kind = (w1.kind == WordKind::loop && w2.kind == WordKind::loop) ? WordKind::loop
                                                                            : WordKind::path;
  Word joined{kind, w1.start, w1.steps};
  joined.steps.insert(joined.steps.end(), w2.steps.begin(), w2.steps.end());
  return reduce(g, joined);
}

Word invert(const Graph& g, const Word& w) {
  validate(g, w);
  Word out{w.kind, word_end(g, w), {}};
  out.steps.reserve(w.steps.size());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) out.steps.push_back(it->inverse());
  return out;
}

GeneratorBasis spanning_tree_generators(const Graph& g) {
  if (!g.is_connected()) throw StructuralError("graph is not connected");
  const std::size_t nv = g.vertex_count();
  // toward_root[v]: the step leaving v along its tree edge toward the base.
  std::vector<std::optional<Step>> toward_root(nv);
  std::vector<bool> seen(nv, false);
  std::vector<bool> in_tree(g.edge_count(), false);

  GeneratorBasis basis;
  std::deque<VertexIndex> queue{g.base()};
  seen[g.base()] = true;
  while (!queue.empty()) {
    VertexIndex v = queue.front();
    queue.pop_front();
    for (EdgeIndex e : g.incident(v)) {
      const Edge& edge = g.edge(e);
      if (edge.source == edge.target) continue;
      VertexIndex u = edge.source == v ? edge.target : edge.source;
      if (seen[u]) continue;
      seen[u] = true;
      in_tree[e] = true;
      // u reaches v by traversing e away from u.
      toward_root[u] = Step{e, edge.source == u ? 1 : -1};
      queue.push_back(u);
    }
  }

  auto path_to_root = [&](VertexIndex v) {
    std::vector<Step> steps;
    while (v != g.base()) {
      const Step s = *toward_root[v];
      steps.push_back(s);
      v = step_target(g, s);
    }
    return steps;
  };

  basis.chord_slot.assign(g.edge_count(), -1);
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) {
      basis.tree.push_back(e);
      continue;
    }
    basis.chord_slot[e] = static_cast<std::ptrdiff_t>(basis.chords.size());
    basis.chords.push_back(e);

    const Edge& edge = g.edge(e);
    std::vector<Step> down = path_to_root(edge.source);
    std::vector<Step> steps;
    for (auto it = down.rbegin(); it != down.rend(); ++it) steps.push_back(it->inverse());
    steps.push_back(Step{e, 1});
    std::vector<Step> up = path_to_root(edge.target);
    steps.insert(steps.end(), up.begin(), up.end());
    basis.generators.push_back(reduce(g, Word{WordKind::loop, g.base(), std::move(steps)}));
  }
  return basis;
}

GeneratorWord reduce_generators(const GeneratorWord& w) {
  GeneratorWord out;
  out.reserve(w.size());
  for (const GeneratorLetter& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

GeneratorWord decompose(const Graph& g, const Word& w, const GeneratorBasis& basis) {
  if (w.kind != WordKind::loop) throw ArgumentError("decompose expects a loop");
  Word r = reduce(g, w);
  GeneratorWord letters;
  for (const Step& s : r.steps) {
    std::ptrdiff_t slot = basis.chord_slot.at(s.edge);
    if (slot >= 0) letters.push_back({static_cast<std::size_t>(slot), s.orientation});
  }
  return reduce_generators(letters);
}

Word substitute(const Graph& g, const GeneratorWord& w, const GeneratorBasis& basis) {
  Word out = constant_loop(g);
  for (const GeneratorLetter& l : w) {
    const Word& gen = basis.generators.at(l.index);
    if (l.sign > 0) {
      out.steps.insert(out.steps.end(), gen.steps.begin(), gen.steps.end());
    } else {
      for (auto it = gen.steps.rbegin(); it != gen.steps.rend(); ++it) {
        out.steps.push_back(it->inverse());
      }
    }
  }
  return reduce(g, out);
}

HoopVector abelianize(const Graph& g, const Word& w, const GeneratorBasis& basis) {
  if (w.kind != WordKind::loop) throw ArgumentError("abelianize expects a loop");
  validate(g, w);
  // Retracing pairs contribute +1 and -1, so reduction does not change the counts.
  HoopVector v(basis.rank(), 0);
  for (const Step& s : w.steps) {
    std::ptrdiff_t slot = basis.chord_slot.at(s.edge);
    if (slot >= 0) v[static_cast<std::size_t>(slot)] += s.orientation;
  }
  return v;
}

bool kernel_test(const Graph& g, const Word& w, const GeneratorBasis& basis) {
  HoopVector v = abelianize(g, w, basis);
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

HoopVector path_abelianize(const Graph& g, const Word& w) {
  validate(g, w);
  HoopVector v(g.edge_count(), 0);
  for (const Step& s : w.steps) v[s.edge] += s.orientation;
  return v;
}

std::vector<HoopVector> generator_edge_images(const Graph& g, const GeneratorBasis& basis) {
  std::vector<HoopVector> cols;
  cols.reserve(basis.rank());
  for (const Word& gen : basis.generators) cols.push_back(path_abelianize(g, gen));
  return cols;
}

Step parse_step(const Graph& g, const std::string& token) {
  bool inverse = !token.empty() && token.front() == '~';
  std::string id = inverse ? token.substr(1) : token;
  auto e = g.find_edge(id);
  if (!e) throw StructuralError("unknown edge '" + id + "'");
  return Step{*e, inverse ? -1 : 1};
}

std::string format_step(const Graph& g, const Step& s) {
  return (s.orientation < 0 ? "~" : "") + g.edge(s.edge).id;
}

}  // namespace looptx
