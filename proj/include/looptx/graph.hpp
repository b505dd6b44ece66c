#pragma once

// Combinatorial loop group and path groupoid on a finite based graph.
//
// Loops are edge words closed at the base vertex; retracing equivalence is
// free cancellation of adjacent inverse steps, so reduced words are the
// canonical representatives. A spanning tree singles out one chord per free
// generator of the fundamental group.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace looptx {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// Integer exponent vector. Doubles as a character index of a torus and as a
/// point of the abelianized hoop lattice.
using HoopVector = std::vector<std::int64_t>;

struct Edge {
  std::string id;
  VertexIndex source;
  VertexIndex target;
};

/// Finite connected directed graph with a distinguished base vertex.
/// Self-loops and parallel edges are allowed.
class Graph {
 public:
  struct EdgeSpec {
    std::string id;
    std::string from;
    std::string to;
  };

  /// Throws StructuralError on undeclared endpoints, duplicate ids, a
  /// missing base, or a disconnected graph.
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
        const std::string& base);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  VertexIndex base() const { return base_; }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }

  std::optional<VertexIndex> find_vertex(const std::string& name) const;
  std::optional<EdgeIndex> find_edge(const std::string& id) const;

  /// Edges incident to v in declaration order; self-loops appear once.
  const std::vector<EdgeIndex>& incident(VertexIndex v) const { return incident_.at(v); }

  bool is_connected() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  VertexIndex base_ = 0;
  std::unordered_map<std::string, VertexIndex> vertex_lookup_;
  std::unordered_map<std::string, EdgeIndex> edge_lookup_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

/// One traversal of an edge, forwards (+1) or backwards (-1).
struct Step {
  EdgeIndex edge;
  int orientation;

  Step inverse() const { return {edge, -orientation}; }
  friend bool operator==(const Step&, const Step&) = default;
};

enum class WordKind { loop, path };

/// A sequence of steps starting at `start`. Loops start (and must end) at
/// the base vertex; the empty loop is the constant loop. Steps are not
/// required to be reduced; `reduce` produces the canonical form.
struct Word {
  WordKind kind = WordKind::loop;
  VertexIndex start = 0;
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  friend bool operator==(const Word&, const Word&) = default;
};

VertexIndex step_source(const Graph& g, const Step& s);
VertexIndex step_target(const Graph& g, const Step& s);

/// Checks endpoint compatibility (and closure at the base for loops).
/// Throws StructuralError otherwise.
void validate(const Graph& g, const Word& w);

/// Endpoint after following the word from its start.
VertexIndex word_end(const Graph& g, const Word& w);

Word constant_loop(const Graph& g);
Word empty_path(VertexIndex at);

/// Builds a validated loop word from steps. Does not reduce.
Word make_loop(const Graph& g, std::vector<Step> steps);

/// Builds a validated path word. An empty path needs its start vertex.
Word make_path(const Graph& g, std::vector<Step> steps,
               std::optional<VertexIndex> start = std::nullopt);

Word reduce(const Graph& g, const Word& w);
bool is_reduced(const Word& w);

/// Reduced concatenation. Loops always compose; paths throw
/// CompositionError unless w1 ends where w2 starts.
Word compose(const Graph& g, const Word& w1, const Word& w2);

Word invert(const Graph& g, const Word& w);

/// Free generators of the loop group from a BFS spanning tree rooted at the
/// base vertex.
struct GeneratorBasis {
  std::vector<EdgeIndex> tree;
  std::vector<EdgeIndex> chords;
  std::vector<Word> generators;
  /// chord_slot[e] is the generator index owning edge e, or -1 for tree edges.
  std::vector<std::ptrdiff_t> chord_slot;

  std::size_t rank() const { return chords.size(); }
};

GeneratorBasis spanning_tree_generators(const Graph& g);

/// A letter beta_index^sign of a word in the generators.
struct GeneratorLetter {
  std::size_t index;
  int sign;

  friend bool operator==(const GeneratorLetter&, const GeneratorLetter&) = default;
};

using GeneratorWord = std::vector<GeneratorLetter>;

GeneratorWord reduce_generators(const GeneratorWord& w);

GeneratorWord decompose(const Graph& g, const Word& w, const GeneratorBasis& basis);

/// Back-substitutes generator loops and reduces.
Word substitute(const Graph& g, const GeneratorWord& w, const GeneratorBasis& basis);

/// Net signed chord counts of the reduced loop.
HoopVector abelianize(const Graph& g, const Word& w, const GeneratorBasis& basis);

/// True iff the loop lies in the commutator subgroup.
bool kernel_test(const Graph& g, const Word& w, const GeneratorBasis& basis);

/// Net signed traversal count per edge.
HoopVector path_abelianize(const Graph& g, const Word& w);

/// Edge-count image of each generator, as columns of an |E| x rank matrix
/// (stored column-major: one HoopVector per generator).
std::vector<HoopVector> generator_edge_images(const Graph& g, const GeneratorBasis& basis);

/// Parses "e1" / "~e1" step tokens.
Step parse_step(const Graph& g, const std::string& token);
std::string format_step(const Graph& g, const Step& s);

}  // namespace looptx
