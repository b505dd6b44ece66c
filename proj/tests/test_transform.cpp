#include <gtest/gtest.h>

#include <numbers>

#include "looptx/errors.hpp"
#include "looptx/random.hpp"
#include "looptx/transform.hpp"
#include "support.hpp"

namespace looptx {
namespace {

CylinderFunction random_cylinder(Rng& rng, std::size_t ambient) {
  Level level = random_level(rng, ambient, 1, ambient, 4);
  return CylinderFunction(level, random_trig_poly(rng, level.size(), 3, 5));
}

TEST(Include, IdentityLeavesFunctionUnchanged) {
  Level full = Level::full(2);
  CylinderFunction psi(full, character({1, -2}));
  CylinderFunction lifted = include_function(psi, full);
  EXPECT_EQ(max_abs_difference(lifted.poly(), psi.poly()), 0.0);
}

TEST(Include, CharacterPushforward) {
  CylinderFunction psi(Level(2, {{2, 1}}), character({3}));
  CylinderFunction lifted = include_function(psi, Level::full(2));
  EXPECT_EQ(max_abs_difference(lifted.poly(), character({6, 3})), 0.0);
}

TEST(Include, MissingRefinementThrows) {
  CylinderFunction psi(Level(2, {{1, 1}}), character({1}));
  EXPECT_THROW(include_function(psi, Level(2, {{2, 0}, {0, 1}})), RefinementError);
}

TEST(Include, Isometry) {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    Level fine = random_level(rng, 3, 1, 3, 3);
    Level coarse = random_sublevel(rng, fine, 1, fine.size(), 3);
    CylinderFunction psi(coarse, random_trig_poly(rng, coarse.size(), 3, 5));
    CylinderFunction lifted = include_function(psi, fine);
    EXPECT_NEAR(norm_squared(lifted.poly()), norm_squared(psi.poly()), 1e-12);
  }
}

TEST(IncludeCoeffs, UnitMassMovesToKm) {
  Level coarse(2, {{2, 1}});
  CoeffFunction lifted = include_coeffs(CoeffFunction::unit({2}), coarse, Level::full(2));
  EXPECT_EQ(max_abs_difference(lifted, CoeffFunction::unit({4, 2})), 0.0);
  CoeffFunction same = include_coeffs(CoeffFunction::unit({1, 1}), Level::full(2), Level::full(2));
  EXPECT_EQ(max_abs_difference(same, CoeffFunction::unit({1, 1})), 0.0);
}

TEST(Diagram, Commutes) {
  CylinderFunction chi(Level(2, {{2, 1}}), character({1}));
  EXPECT_EQ(verify_diagram(chi, Level::full(2)), 0.0);
  EXPECT_EQ(verify_diagram(chi, chi.level()), 0.0);
  Rng rng(2);
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  for (int t = 0; t < 300; ++t) {
    Level fine = random_level(rng, 3, 2, 3, 3);
    Level mid = random_sublevel(rng, fine, 1, fine.size(), 3);
    Level low = random_sublevel(rng, mid, 1, mid.size(), 3);
    CylinderFunction psi(low, random_trig_poly(rng, low.size(), 2, 4));
    EXPECT_LE(verify_diagram(psi, fine), 1e-12);
    ChainCheck chain = verify_chain(psi, mid, fine);
    EXPECT_LE(chain.residual, 1e-12);
    EXPECT_TRUE(chain.consistent);
    std::vector<std::vector<double>> points(4, std::vector<double>(fine.size()));
    for (auto& p : points) {
      for (double& x : p) x = angle(rng);
    }
    EXPECT_LE(point_evaluation_residual(psi, fine, points), 1e-10);
  }
}

TEST(LoopTransform, Examples) {
  CylinderFunction top(Level::full(2), character({1, -1}));
  EXPECT_EQ(max_abs_difference(loop_transform(top), LoopState::unit({1, -1})), 0.0);
  CylinderFunction one(Level::full(2), TrigPoly::constant(2, 1.0));
  EXPECT_EQ(max_abs_difference(loop_transform(one), LoopState::unit({0, 0})), 0.0);
  TrigPoly p(1);
  p.add_term({1}, Complex(0.5, -2));
  LoopState expected(2);
  expected.add_term({2, 1}, Complex(0.5, -2));
  EXPECT_EQ(max_abs_difference(loop_transform(CylinderFunction(Level(2, {{2, 1}}), p)), expected), 0.0);
}

TEST(LoopTransform, AmbientMustMatchBasis) {
  Graph g = test::theta_graph();
  CylinderFunction psi(Level::full(3), character({1, 0, 0}));
  EXPECT_THROW(loop_transform(psi, spanning_tree_generators(g)), ArgumentError);
}

TEST(InverseTransform, Examples) {
  CylinderFunction c = inverse_transform(LoopState::unit({0, 0}));
  EXPECT_EQ(cylinder_distance(c, CylinderFunction(Level::trivial(2), TrigPoly(0, {{{}, 1.0}}))), 0.0);
  CylinderFunction t = inverse_transform(LoopState::unit({2, 1}));
  EXPECT_EQ(cylinder_distance(t, CylinderFunction(Level::full(2), character({2, 1}))), 0.0);
  LoopState mixed(2);
  mixed.add_term({1, 0}, 1.0);
  mixed.add_term({1, 2}, Complex(0, 1));
  CylinderFunction m = inverse_transform(mixed);
  EXPECT_EQ(max_abs_difference(loop_transform(m), mixed), 0.0);
}

TEST(InverseTransform, EmptyStateIsZeroFunction) {
  CylinderFunction z = inverse_transform(LoopState(3));
  EXPECT_TRUE(z.poly().empty());
}

TEST(RoundTrip, Exact) {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    LoopState s = random_loop_state(rng, 3, 6, 5);
    EXPECT_EQ(max_abs_difference(loop_transform(inverse_transform(s)), s), 0.0);
    CylinderFunction psi = random_cylinder(rng, 3);
    EXPECT_EQ(cylinder_distance(inverse_transform(loop_transform(psi)), psi), 0.0);
  }
}

TEST(Unitarity, InnerProductsPreserved) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    CylinderFunction psi = random_cylinder(rng, 3);
    CylinderFunction phi = t % 4 == 0 ? psi : random_cylinder(rng, 3);
    Complex lhs = state_inner_product(loop_transform(psi), loop_transform(phi));
    EXPECT_LE(std::abs(lhs - cylinder_inner_product(psi, phi)), 1e-12);
  }
}

TEST(Unitarity, DisjointLevelsOrthogonal) {
  CylinderFunction a(Level(2, {{2, 0}}), character({1}));
  CylinderFunction b(Level(2, {{0, 3}}), character({1}));
  EXPECT_EQ(cylinder_inner_product(a, b), Complex(0.0));
  EXPECT_EQ(cylinder_inner_product(a, a), Complex(1.0));
}

// Distinct finitely supported states give distinct cylinder functions.
TEST(Injectivity, DistinctStatesDistinctFunctions) {
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    LoopState a = random_loop_state(rng, 2, 4, 3);
    LoopState b = a;
    b.add_term({static_cast<std::int64_t>(rng() % 5), 1}, 0.25);
    EXPECT_GT(cylinder_distance(inverse_transform(a), inverse_transform(b)), 0.0);
  }
}

TEST(PathTransform, Examples) {
  Graph g = test::theta_graph();
  CylinderFunction one(Level::full(3), TrigPoly::constant(3, 1.0));
  EXPECT_EQ(max_abs_difference(path_transform(one, g), LoopState::unit({0, 0, 0})), 0.0);
  CylinderFunction edge(Level::full(3), character({0, 1, 0}));
  EXPECT_EQ(max_abs_difference(path_transform(edge, g), LoopState::unit({0, 1, 0})), 0.0);
  EXPECT_THROW(path_transform(CylinderFunction(Level::full(2), character({1, 0})), g), ArgumentError);
}

TEST(PathTransform, AgreesWithLoopTransformOnClosedWords) {
  Rng rng(6);
  for (int t = 0; t < 200; ++t) {
    Graph g = random_connected_graph(rng, 8);
    GeneratorBasis basis = spanning_tree_generators(g);
    if (basis.rank() == 0) continue;
    IntMatrix c = chord_to_edge_matrix(g, basis);
    Word w = random_walk_loop(g, basis, rng, 10);
    EXPECT_EQ(c * abelianize(g, w, basis), path_abelianize(g, w));
    CylinderFunction psi = random_cylinder(rng, basis.rank());
    LoopState via_edges = path_transform(to_edge_lattice(psi, g, basis), g);
    EXPECT_LE(max_abs_difference(via_edges, pushforward(loop_transform(psi), c)), 1e-12);
  }
}

}  // namespace
}  // namespace looptx
