#pragma once

// The loop transform as an inductive limit of torus Fourier transforms.
//
// Every state is a finite-level representative: a trigonometric polynomial
// on the torus of one level. Nested levels L <= L' are linked by the integer
// refinement matrix K, which acts on both sides of the Fourier transform as
// the index pushforward m -> K m. Loop states live on the ambient hoop
// lattice with counting measure.

#include <span>
#include <vector>

#include "looptx/graph.hpp"
#include "looptx/lattice.hpp"
#include "looptx/torus.hpp"

namespace looptx {

struct LoopStateTag;

/// Finitely supported function on the ambient hoop lattice Z^n.
using LoopState = LatticeSeries<LoopStateTag>;

/// A function of finitely many holonomies: a trigonometric polynomial on the
/// torus of `level`, one angle per basis vector.
class CylinderFunction {
 public:
  CylinderFunction(Level level, TrigPoly poly);

  const Level& level() const { return level_; }
  const TrigPoly& poly() const { return poly_; }
  std::size_t ambient() const { return level_.ambient(); }

 private:
  Level level_;
  TrigPoly poly_;
};

/// Index pushforward m -> K m into a series of dimension K.rows().
template <class Tag>
LatticeSeries<Tag> pushforward(const LatticeSeries<Tag>& s, const IntMatrix& k) {
  if (k.cols() != s.dim()) throw std::invalid_argument("pushforward shape mismatch");
  LatticeSeries<Tag> out(k.rows());
  for (const auto& [m, c] : s.coeffs()) out.add_term(k * m, c);
  return out;
}

/// Function-side inclusion into a finer level. Throws RefinementError when
/// ψ's level is not contained in `fine`.
CylinderFunction include_function(const CylinderFunction& psi, const Level& fine);

/// Coefficient-side inclusion of a Fourier coefficient function living at
/// `coarse` into `fine`.
CoeffFunction include_coeffs(const CoeffFunction& coeffs, const Level& coarse,
                             const Level& fine);

LoopState loop_transform(const CylinderFunction& psi);

/// Same, additionally checking that ψ lives on the hoop lattice of `basis`.
LoopState loop_transform(const CylinderFunction& psi, const GeneratorBasis& basis);

/// Σ ℓ(h) T_h at the level generated by the support.
CylinderFunction inverse_transform(const LoopState& state);

/// ℓ² inner product with counting measure, antilinear in the first slot.
Complex state_inner_product(const LoopState& a, const LoopState& b);

/// L² inner product after including both into the join of their levels.
Complex cylinder_inner_product(const CylinderFunction& psi, const CylinderFunction& phi);

/// Largest coefficient discrepancy after including both into a common level.
double cylinder_distance(const CylinderFunction& psi, const CylinderFunction& phi);

/// Both ways around the square F' ∘ i = j ∘ F; returns the largest
/// coefficient discrepancy.
double verify_diagram(const CylinderFunction& psi, const Level& fine);

struct ChainCheck {
  double residual = 0.0;        // one-step vs two-step inclusion, coefficient side
  bool consistent = false;      // K(L'',L) == K(L'',L') K(L',L) exactly
};

/// Checks the two-step consistency of inclusions along coarse <= mid <= fine.
ChainCheck verify_chain(const CylinderFunction& psi, const Level& mid, const Level& fine);

/// max |eval(include(ψ), θ') - eval(ψ, Kᵀθ')| over the given fine-level points.
double point_evaluation_residual(const CylinderFunction& psi, const Level& fine,
                                 std::span<const std::vector<double>> fine_points);

/// Transform over the edge lattice Z^E: ψ's level must have ambient |E|.
LoopState path_transform(const CylinderFunction& psi, const Graph& g);

/// Matrix sending chord-lattice hoops to edge-count vectors (columns are
/// the edge images of the generators).
IntMatrix chord_to_edge_matrix(const Graph& g, const GeneratorBasis& basis);

/// Re-expresses a loop-lattice cylinder function on the edge lattice.
CylinderFunction to_edge_lattice(const CylinderFunction& psi, const Graph& g,
                                 const GeneratorBasis& basis);

}  // namespace looptx
