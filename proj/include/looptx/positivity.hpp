#pragma once

// Measures on the torus with trigonometric-polynomial densities and the
// functionals they induce on Wilson characters.
//
// Two positivity tests are kept separate: the Toeplitz-window eigenvalue
// test (complete in one dimension, sound in general) and a sampled-grid
// minimum of the density.

#include <span>
#include <vector>

#include "looptx/torus.hpp"

namespace looptx {

/// Tolerance for the Hermitian coefficient symmetry, relative to the
/// largest coefficient modulus (absolute below modulus 1).
inline constexpr double kHermitianTolerance = 1e-14;

/// dμ = p dμ₀ with p real-valued on the torus.
class MeasureDensity {
 public:
  /// Throws ArgumentError if p̂(-k) != conj p̂(k).
  explicit MeasureDensity(TrigPoly density);

  const TrigPoly& density() const { return density_; }
  double total_mass() const { return haar_integral(density_).real(); }

 private:
  TrigPoly density_;
};

struct CharacterFunctionalTag;

/// Value at k is ℓ(T_k).
using CharacterFunctional = LatticeSeries<CharacterFunctionalTag>;

bool is_hermitian(const TrigPoly& p);
bool is_hermitian(const CharacterFunctional& f);

CharacterFunctional functional_from_density(const MeasureDensity& p);

/// Throws ArgumentError when ℓ(-k) != conj ℓ(k).
MeasureDensity density_from_functional(const CharacterFunctional& f);

/// Smallest eigenvalue of M[i][j] = ℓ(k_i - k_j) over the window points.
/// Returns +inf for an empty window.
double psd_test(const CharacterFunctional& f, std::span<const HoopVector> window);

/// Lattice points of the box [0, extent_a] per axis.
std::vector<HoopVector> box_window(std::span<const std::int64_t> extent);

struct GridMinimum {
  double value = 0.0;
  std::vector<double> theta;
};

/// Minimum of the density over the odd sampling grid, polished by a local
/// Newton search from the best grid points. Throws AliasingError if the grid
/// is too coarse for the density's bandwidth.
GridMinimum grid_minimum(const MeasureDensity& p, std::span<const std::size_t> grid);

double grid_positivity_test(const MeasureDensity& p, std::span<const std::size_t> grid);

struct ContinuityReport {
  bool holds = true;
  double bound = 0.0;      // ‖ψ‖_{L²(μ)} ‖μ‖^{1/2}
  double max_value = 0.0;  // max_k |ℓ_{μψ}(T_k)|
};

/// Checks |∫ conj(χ_k) ψ dμ| <= ‖ψ‖_{L²(μ)} ‖μ‖^{1/2} + 1e-9 for every k in
/// the support of ψ p. `grid` is used to confirm p >= 0; a signed density
/// throws ArgumentError.
ContinuityReport l2_continuity_report(const MeasureDensity& p, const TrigPoly& psi,
                                      std::span<const std::size_t> grid);

bool l2_continuity_check(const MeasureDensity& p, const TrigPoly& psi,
                         std::span<const std::size_t> grid);

}  // namespace looptx
