#pragma once

// JSON schemas for graphs, words, connections, polynomials, levels,
// cylinder functions, loop states, and densities. Readers throw
// nlohmann::json exceptions on shape errors and the library's own errors on
// semantic ones.

#include "json.hpp"

#include "looptx/graph.hpp"
#include "looptx/holonomy.hpp"
#include "looptx/lattice.hpp"
#include "looptx/positivity.hpp"
#include "looptx/torus.hpp"
#include "looptx/transform.hpp"

namespace looptx {

using Json = nlohmann::json;

Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"kind":"loop","steps":["e2","~e1"]}; paths may add "start" (required
/// when empty). The word is validated and reduced.
Word word_from_json(const Graph& g, const Json& j);
Json to_json(const Graph& g, const Word& w);

Json to_json(const Graph& g, const GeneratorBasis& basis);
/// ["b1","~b2"], 1-based generator names.
Json to_json(const GeneratorWord& w);

GroupElement group_element_from_json(GaugeGroup group, const Json& j);
Json to_json(const GroupElement& g);
GaugeGroup group_from_string(const std::string& s);
std::string to_string(GaugeGroup group);

/// {"group":"U1","assignment":{"e1":0.0}} or SU2 with four [re,im] entries
/// in row-major order.
Connection connection_from_json(const Graph& g, const Json& j);
Json to_json(const Connection& a);

Json complex_to_json(Complex c);

TrigPoly trig_poly_from_json(const Json& j);
Json to_json(const TrigPoly& p);

CoeffFunction coeff_function_from_json(const Json& j);
Json to_json(const CoeffFunction& c);

Level level_from_json(const Json& j);
Json to_json(const Level& level);

Json to_json(const IntMatrix& m);

CylinderFunction cylinder_from_json(const Json& j);
Json to_json(const CylinderFunction& psi);

LoopState loop_state_from_json(const Json& j);
Json to_json(const LoopState& state);

MeasureDensity density_from_json(const Json& j);
Json to_json(const MeasureDensity& p);

CharacterFunctional functional_from_json(const Json& j);
Json to_json(const CharacterFunctional& f);

}  // namespace looptx
