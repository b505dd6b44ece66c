#include "looptx/transform.hpp"

#include <cmath>
#include <string>

#include "looptx/errors.hpp"

namespace looptx {

namespace {

IntMatrix require_refinement(const Level& coarse, const Level& fine) {
  std::optional<RefinementMatrix> k = refinement_matrix(coarse, fine);
  if (!k) throw RefinementError("level is not contained in the requested finer level");
  return k->entries;
}

}  // namespace

CylinderFunction::CylinderFunction(Level level, TrigPoly poly)
    : level_(std::move(level)), poly_(std::move(poly)) {
  if (poly_.dim() != level_.size()) {
    throw ArgumentError("polynomial dimension " + std::to_string(poly_.dim()) +
                        " does not match level rank " + std::to_string(level_.size()));
  }
}

CylinderFunction include_function(const CylinderFunction& psi, const Level& fine) {
  IntMatrix k = require_refinement(psi.level(), fine);
  return CylinderFunction(fine, pushforward(psi.poly(), k));
}

CoeffFunction include_coeffs(const CoeffFunction& coeffs, const Level& coarse,
                             const Level& fine) {
  if (coeffs.dim() != coarse.size()) throw ArgumentError("coefficients do not match the level");
  return pushforward(coeffs, require_refinement(coarse, fine));
}

LoopState loop_transform(const CylinderFunction& psi) {
  const CoeffFunction coeffs = fourier(psi.poly());
  LoopState state(psi.ambient());
  const IntMatrix basis = psi.level().basis_matrix();
  for (const auto& [m, c] : coeffs.coeffs()) state.add_term(basis * m, c);
  return state;
}

LoopState loop_transform(const CylinderFunction& psi, const GeneratorBasis& basis) {
  if (psi.ambient() != basis.rank()) {
    throw ArgumentError("cylinder function ambient " + std::to_string(psi.ambient()) +
                        " does not match hoop lattice rank " + std::to_string(basis.rank()));
  }
  return loop_transform(psi);
}

CylinderFunction inverse_transform(const LoopState& state) {
  const std::size_t n = state.dim();
  if (state.empty()) return CylinderFunction(Level::trivial(n), TrigPoly(0));

  std::vector<HoopVector> support;
  support.reserve(state.size());
  for (const auto& [h, c] : state.coeffs()) support.push_back(h);
  ColumnHermiteForm span(IntMatrix::from_columns(n, support));
  Level level(n, span.basis());

  ColumnHermiteForm coords(level.basis_matrix());
  TrigPoly poly(level.size());
  for (const auto& [h, c] : state.coeffs()) {
    std::optional<HoopVector> m = coords.solve(h);
    // The support generates the level, so every support point has coordinates.
    if (!m) throw std::logic_error("support point outside its own span");
    poly.add_term(*m, c);
  }
  return CylinderFunction(std::move(level), std::move(poly));
}

Complex state_inner_product(const LoopState& a, const LoopState& b) {
  if (a.dim() != b.dim()) throw ArgumentError("loop states on different hoop lattices");
  Complex total{};
  for (const auto& [h, c] : a.coeffs()) total += std::conj(c) * b.at(h);
  return total;
}

Complex cylinder_inner_product(const CylinderFunction& psi, const CylinderFunction& phi) {
  if (psi.ambient() != phi.ambient()) throw ArgumentError("ambient hoop lattices differ");
  Level common = join_levels(psi.level(), phi.level());
  return inner_product(include_function(psi, common).poly(),
                       include_function(phi, common).poly());
}

double cylinder_distance(const CylinderFunction& psi, const CylinderFunction& phi) {
  if (psi.ambient() != phi.ambient()) throw ArgumentError("ambient hoop lattices differ");
  Level common = join_levels(psi.level(), phi.level());
  return max_abs_difference(include_function(psi, common).poly(),
                            include_function(phi, common).poly());
}

double verify_diagram(const CylinderFunction& psi, const Level& fine) {
  CoeffFunction function_first = fourier(include_function(psi, fine).poly());
  CoeffFunction fourier_first = include_coeffs(fourier(psi.poly()), psi.level(), fine);
  return max_abs_difference(function_first, fourier_first);
}

ChainCheck verify_chain(const CylinderFunction& psi, const Level& mid, const Level& fine) {
  IntMatrix k_mid = require_refinement(psi.level(), mid);
  IntMatrix k_fine = require_refinement(mid, fine);
  IntMatrix k_direct = require_refinement(psi.level(), fine);

  CoeffFunction coeffs = fourier(psi.poly());
  CoeffFunction two_step = pushforward(pushforward(coeffs, k_mid), k_fine);
  CoeffFunction one_step = fourier(include_function(psi, fine).poly());

  ChainCheck check;
  check.residual = max_abs_difference(two_step, one_step);
  check.consistent = (k_fine * k_mid) == k_direct;
  return check;
}

double point_evaluation_residual(const CylinderFunction& psi, const Level& fine,
                                 std::span<const std::vector<double>> fine_points) {
  IntMatrix k = require_refinement(psi.level(), fine);
  CylinderFunction included = include_function(psi, fine);
  double worst = 0.0;
  std::vector<double> coarse(psi.level().size());
  for (const std::vector<double>& theta : fine_points) {
    for (std::size_t s = 0; s < k.cols(); ++s) {
      double acc = 0.0;
      for (std::size_t r = 0; r < k.rows(); ++r) acc += static_cast<double>(k(r, s)) * theta[r];
      coarse[s] = acc;
    }
    worst = std::max(worst, std::abs(eval_at(included.poly(), theta) - eval_at(psi.poly(), coarse)));
  }
  return worst;
}

LoopState path_transform(const CylinderFunction& psi, const Graph& g) {
  if (psi.ambient() != g.edge_count()) {
    throw ArgumentError("path transform needs a level in the edge lattice Z^" +
                        std::to_string(g.edge_count()));
  }
  return loop_transform(psi);
}

IntMatrix chord_to_edge_matrix(const Graph& g, const GeneratorBasis& basis) {
  return IntMatrix::from_columns(g.edge_count(), generator_edge_images(g, basis));
}

CylinderFunction to_edge_lattice(const CylinderFunction& psi, const Graph& g,
                                 const GeneratorBasis& basis) {
  if (psi.ambient() != basis.rank()) throw ArgumentError("not a loop-lattice cylinder function");
  IntMatrix c = chord_to_edge_matrix(g, basis);
  Level edge_level(g.edge_count(), (c * psi.level().basis_matrix()).columns());
  return CylinderFunction(std::move(edge_level), psi.poly());
}

}  // namespace looptx
