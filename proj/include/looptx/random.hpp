#pragma once

// Seeded generators for property sweeps. Every sweep takes an explicit
// engine; identical seeds reproduce identical inputs.

#include <cstdint>
#include <random>

#include "looptx/graph.hpp"
#include "looptx/holonomy.hpp"
#include "looptx/lattice.hpp"
#include "looptx/positivity.hpp"
#include "looptx/torus.hpp"
#include "looptx/transform.hpp"

namespace looptx {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Connected graph with at most max_edges edges (and at least min_rank
/// independent cycles when the edge budget allows). Vertices v0.., edges
/// e1.., base v0.
Graph random_connected_graph(Rng& rng, std::size_t max_edges, std::size_t min_rank = 1);

/// Random walk from the base closed up along the tree; may contain
/// immediate retracings.
Word random_walk_loop(const Graph& g, const GeneratorBasis& basis, Rng& rng, std::size_t length);

/// Random walk path from a random vertex; may contain retracings.
Word random_walk_path(const Graph& g, Rng& rng, std::size_t length);

GeneratorWord random_generator_word(std::size_t rank, Rng& rng, std::size_t length);

/// Loop of the product shape ∏_j β_1^{k_{1j}} ⋯ β_n^{k_{nj}} with exponent
/// row sums Q. `blocks` is the number of j-blocks.
GeneratorWord product_shape_word(const std::vector<std::vector<std::int64_t>>& exponents);

/// Random exponent rows (n x blocks) with prescribed row sums.
std::vector<std::vector<std::int64_t>> random_exponent_rows(Rng& rng, std::size_t rank,
                                                            std::size_t blocks,
                                                            const HoopVector& row_sums,
                                                            std::int64_t max_entry);

U1Element random_u1(Rng& rng);
/// Haar-distributed SU(2) element.
SU2Element random_su2(Rng& rng);
Connection random_connection(const Graph& g, GaugeGroup group, Rng& rng);

/// Level of rank in [min_rank, max_rank] inside Z^ambient with entries in
/// [-max_entry, max_entry].
Level random_level(Rng& rng, std::size_t ambient, std::size_t min_rank, std::size_t max_rank,
                   std::int64_t max_entry);

/// Coarser level fine_basis * K for a random full-column-rank integer K.
Level random_sublevel(Rng& rng, const Level& fine, std::size_t min_rank, std::size_t max_rank,
                      std::int64_t max_entry);

/// Closed walk at vertex `at` (out along a random walk, back through the tree).
Word random_closed_path(const Graph& g, const GeneratorBasis& basis, Rng& rng, VertexIndex at,
                        std::size_t length);

TrigPoly random_trig_poly(Rng& rng, std::size_t dim, std::int64_t bandwidth, std::size_t terms);

/// Real-valued polynomial |q|^2 for random q.
TrigPoly random_squared_modulus(Rng& rng, std::size_t dim, std::int64_t bandwidth,
                                std::size_t terms);

LoopState random_loop_state(Rng& rng, std::size_t ambient, std::size_t terms,
                            std::int64_t max_entry);

}  // namespace looptx
