#include "looptx/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace looptx {

namespace {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

Complex random_complex(Rng& rng) {
  std::normal_distribution<double> normal;
  return {normal(rng), normal(rng)};
}

std::vector<Step> tree_path_to_base(const Graph& g, const GeneratorBasis& basis, VertexIndex v) {
  // Breadth-first search over tree edges only.
  std::vector<bool> tree(g.edge_count(), false);
  for (EdgeIndex e : basis.tree) tree[e] = true;
  std::vector<std::optional<Step>> via(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> frontier{g.base()};
  seen[g.base()] = true;
  while (!frontier.empty()) {
    std::vector<VertexIndex> next;
    for (VertexIndex u : frontier) {
      for (EdgeIndex e : g.incident(u)) {
        if (!tree[e]) continue;
        const Edge& edge = g.edge(e);
        VertexIndex w = edge.source == u ? edge.target : edge.source;
        if (seen[w]) continue;
        seen[w] = true;
        via[w] = Step{e, edge.source == w ? 1 : -1};  // from w toward u
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Step> steps;
  while (v != g.base()) {
    steps.push_back(*via[v]);
    v = step_target(g, steps.back());
  }
  return steps;
}

std::vector<Step> walk(const Graph& g, Rng& rng, VertexIndex from, std::size_t length) {
  std::vector<Step> steps;
  VertexIndex at = from;
  for (std::size_t i = 0; i < length; ++i) {
    const auto& inc = g.incident(at);
    if (inc.empty()) break;
    EdgeIndex e = inc[uniform_index(rng, inc.size())];
    const Edge& edge = g.edge(e);
    int orientation;
    if (edge.source == edge.target) {
      orientation = uniform_int(rng, 0, 1) ? 1 : -1;
    } else {
      orientation = edge.source == at ? 1 : -1;
    }
    steps.push_back({e, orientation});
    at = step_target(g, steps.back());
  }
  return steps;
}

}  // namespace

Graph random_connected_graph(Rng& rng, std::size_t max_edges, std::size_t min_rank) {
  const std::size_t max_vertices = std::max<std::size_t>(1, max_edges + 1 - std::min(min_rank, max_edges));
  const std::size_t nv = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<std::int64_t>(max_vertices)));
  const std::size_t tree_edges = nv - 1;
  const std::size_t lo = std::min(max_edges, tree_edges + min_rank);
  const std::size_t ne = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(lo), static_cast<std::int64_t>(max_edges)));

  std::vector<std::string> vertices;
  for (std::size_t v = 0; v < nv; ++v) vertices.push_back("v" + std::to_string(v));

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t v = 1; v < nv; ++v) {
    std::size_t parent = uniform_index(rng, v);
    pairs.emplace_back(parent, v);
  }
  while (pairs.size() < ne) pairs.emplace_back(uniform_index(rng, nv), uniform_index(rng, nv));
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Graph::EdgeSpec> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (uniform_int(rng, 0, 1)) std::swap(a, b);
    edges.push_back({"e" + std::to_string(i + 1), vertices[a], vertices[b]});
  }
  return Graph(std::move(vertices), std::move(edges), "v0");
}

Word random_walk_loop(const Graph& g, const GeneratorBasis& basis, Rng& rng, std::size_t length) {
  std::vector<Step> steps = walk(g, rng, g.base(), length);
  VertexIndex end = steps.empty() ? g.base() : step_target(g, steps.back());
  std::vector<Step> back = tree_path_to_base(g, basis, end);
  steps.insert(steps.end(), back.begin(), back.end());
  return make_loop(g, std::move(steps));
}

Word random_closed_path(const Graph& g, const GeneratorBasis& basis, Rng& rng, VertexIndex at,
                        std::size_t length) {
  std::vector<Step> steps = walk(g, rng, at, length);
  VertexIndex end = steps.empty() ? at : step_target(g, steps.back());
  std::vector<Step> down = tree_path_to_base(g, basis, end);
  std::vector<Step> up = tree_path_to_base(g, basis, at);
  steps.insert(steps.end(), down.begin(), down.end());
  for (auto it = up.rbegin(); it != up.rend(); ++it) steps.push_back(it->inverse());
  return reduce(g, make_path(g, std::move(steps), at));
}

Word random_walk_path(const Graph& g, Rng& rng, std::size_t length) {
  VertexIndex from = uniform_index(rng, g.vertex_count());
  return make_path(g, walk(g, rng, from, length), from);
}

GeneratorWord random_generator_word(std::size_t rank, Rng& rng, std::size_t length) {
  GeneratorWord w;
  if (rank == 0) return w;
  for (std::size_t i = 0; i < length; ++i) {
    w.push_back({uniform_index(rng, rank), uniform_int(rng, 0, 1) ? 1 : -1});
  }
  return w;
}

GeneratorWord product_shape_word(const std::vector<std::vector<std::int64_t>>& exponents) {
  GeneratorWord w;
  const std::size_t blocks = exponents.empty() ? 0 : exponents.front().size();
  for (std::size_t j = 0; j < blocks; ++j) {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      std::int64_t k = exponents[i][j];
      for (std::int64_t t = 0; t < std::abs(k); ++t) w.push_back({i, k > 0 ? 1 : -1});
    }
  }
  return w;
}

std::vector<std::vector<std::int64_t>> random_exponent_rows(Rng& rng, std::size_t rank,
                                                            std::size_t blocks,
                                                            const HoopVector& row_sums,
                                                            std::int64_t max_entry) {
  std::vector<std::vector<std::int64_t>> rows(rank, std::vector<std::int64_t>(blocks, 0));
  for (std::size_t i = 0; i < rank; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 0; j + 1 < blocks; ++j) {
      rows[i][j] = uniform_int(rng, -max_entry, max_entry);
      sum += rows[i][j];
    }
    // The last block absorbs the remainder so the row sums come out exact.
    if (blocks > 0) rows[i][blocks - 1] = row_sums[i] - sum;
  }
  return rows;
}

U1Element random_u1(Rng& rng) {
  return U1Element(std::uniform_real_distribution<double>(0.0, 2.0 * std::numbers::pi)(rng));
}

SU2Element random_su2(Rng& rng) {
  std::normal_distribution<double> normal;
  return SU2Element::from_quaternion(normal(rng), normal(rng), normal(rng), normal(rng));
}

Connection random_connection(const Graph& g, GaugeGroup group, Rng& rng) {
  std::vector<GroupElement> values;
  values.reserve(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (group == GaugeGroup::u1) {
      values.emplace_back(random_u1(rng));
    } else {
      values.emplace_back(random_su2(rng));
    }
  }
  return Connection(g, group, std::move(values));
}

Level random_level(Rng& rng, std::size_t ambient, std::size_t min_rank, std::size_t max_rank,
                   std::int64_t max_entry) {
  max_rank = std::min(max_rank, ambient);
  min_rank = std::min(min_rank, max_rank);
  const auto rank = static_cast<std::size_t>(
      uniform_int(rng, static_cast<std::int64_t>(min_rank), static_cast<std::int64_t>(max_rank)));
  while (true) {
    std::vector<HoopVector> basis;
    for (std::size_t c = 0; c < rank; ++c) {
      HoopVector v(ambient);
      for (auto& x : v) x = uniform_int(rng, -max_entry, max_entry);
      basis.push_back(std::move(v));
    }
    if (is_independent(basis)) return Level(ambient, std::move(basis));
  }
}

Level random_sublevel(Rng& rng, const Level& fine, std::size_t min_rank, std::size_t max_rank,
                      std::int64_t max_entry) {
  Level coords = random_level(rng, fine.size(), min_rank, max_rank, max_entry);
  IntMatrix b = fine.basis_matrix() * coords.basis_matrix();
  return Level(fine.ambient(), b.columns());
}

TrigPoly random_trig_poly(Rng& rng, std::size_t dim, std::int64_t bandwidth, std::size_t terms) {
  TrigPoly p(dim);
  for (std::size_t t = 0; t < terms; ++t) {
    HoopVector k(dim);
    for (auto& x : k) x = uniform_int(rng, -bandwidth, bandwidth);
    p.add_term(k, random_complex(rng));
  }
  return p;
}

TrigPoly random_squared_modulus(Rng& rng, std::size_t dim, std::int64_t bandwidth,
                                std::size_t terms) {
  TrigPoly q = random_trig_poly(rng, dim, bandwidth, terms);
  return mul(conj(q), q);
}

LoopState random_loop_state(Rng& rng, std::size_t ambient, std::size_t terms,
                            std::int64_t max_entry) {
  LoopState s(ambient);
  for (std::size_t t = 0; t < terms; ++t) {
    HoopVector h(ambient);
    for (auto& x : h) x = uniform_int(rng, -max_entry, max_entry);
    s.add_term(h, random_complex(rng));
  }
  return s;
}

}  // namespace looptx
