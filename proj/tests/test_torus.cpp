#include <gtest/gtest.h>

#include <numbers>

#include "looptx/errors.hpp"
#include "looptx/random.hpp"
#include "looptx/torus.hpp"
#include "support.hpp"

namespace looptx {
namespace {

constexpr double kPi = std::numbers::pi;

TrigPoly one_plus_chi(int sign) {
  TrigPoly p = TrigPoly::constant(1, 1.0);
  p.add_term({sign}, 1.0);
  return p;
}

TrigPoly two_cos_plus_two() {
  TrigPoly p = TrigPoly::constant(1, 2.0);
  p.add_term({1}, 1.0);
  p.add_term({-1}, 1.0);
  return p;
}

TEST(Characters, Multiplicative) {
  EXPECT_EQ(max_abs_difference(mul(character({2, -1}), character({1, 3})), character({3, 2})), 0.0);
  EXPECT_EQ(max_abs_difference(conj(character({2, -1})), character({-2, 1})), 0.0);
}

TEST(Characters, ProductExpansion) {
  EXPECT_EQ(max_abs_difference(mul(one_plus_chi(1), one_plus_chi(-1)), two_cos_plus_two()), 0.0);
}

TEST(Haar, Examples) {
  EXPECT_EQ(haar_integral(TrigPoly::constant(2, 1.0)), Complex(1.0));
  EXPECT_EQ(haar_integral(character({0, 3})), Complex(0.0));
  EXPECT_EQ(haar_integral(mul(conj(one_plus_chi(1)), one_plus_chi(1))), Complex(2.0));
}

TEST(InnerProduct, Orthonormal) {
  EXPECT_EQ(inner_product(character({1, 2}), character({1, 2})), Complex(1.0));
  EXPECT_EQ(inner_product(character({1, 2}), character({2, 1})), Complex(0.0));
  EXPECT_EQ(inner_product(one_plus_chi(1), one_plus_chi(1)), Complex(2.0));
  TrigPoly p = scale(character({1}), Complex(0, 1));
  EXPECT_EQ(inner_product(p, character({1})), Complex(0, -1));
}

TEST(EvalAt, Examples) {
  std::vector<double> pi{kPi};
  std::vector<double> zero{0.0};
  EXPECT_EQ(eval_at(TrigPoly::constant(1, 1.0), pi), Complex(1.0));
  EXPECT_NEAR(std::abs(eval_at(character({1}), pi) + 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(eval_at(two_cos_plus_two(), zero) - 4.0), 0.0, 1e-15);
}

TEST(EvalAt, AlgebraHomomorphism) {
  Rng rng(1);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int t = 0; t < 300; ++t) {
    std::size_t dim = 1 + rng() % 3;
    TrigPoly p = random_trig_poly(rng, dim, 3, 5);
    TrigPoly q = random_trig_poly(rng, dim, 3, 5);
    std::vector<double> theta(dim);
    for (double& x : theta) x = angle(rng);
    EXPECT_NEAR(std::abs(eval_at(mul(p, q), theta) - eval_at(p, theta) * eval_at(q, theta)), 0.0, 1e-10);
  }
}

TEST(Fourier, Examples) {
  EXPECT_EQ(max_abs_difference(fourier(character({3})), CoeffFunction::unit({3})), 0.0);
  EXPECT_EQ(max_abs_difference(fourier(TrigPoly::constant(1, 1.0)), CoeffFunction::unit({0})), 0.0);
  CoeffFunction c = fourier(two_cos_plus_two());
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(c.at({0}), Complex(2.0));
  EXPECT_EQ(c.at({1}), Complex(1.0));
  EXPECT_EQ(c.at({-1}), Complex(1.0));
  EXPECT_EQ(max_abs_difference(inverse_fourier(c), two_cos_plus_two()), 0.0);
}

TEST(FftOracle, Examples) {
  EXPECT_LE(max_abs_difference(fft_oracle(character({1}), 5), CoeffFunction::unit({1})), 1e-12);
  EXPECT_LE(max_abs_difference(fft_oracle(TrigPoly::constant(1, 1.0), 3), CoeffFunction::unit({0})), 1e-12);
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    TrigPoly p = random_trig_poly(rng, 2, 3, 10);
    EXPECT_LE(max_abs_difference(fft_oracle(p, 9), fourier(p)), 1e-9);
  }
}

TEST(FftOracle, AgreesWithNaiveDft) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    TrigPoly p = random_trig_poly(rng, 2, 2, 6);
    std::vector<std::size_t> grid{5, 7};
    CoeffFunction fast = fft_oracle(p, grid);
    for (std::int64_t a = -2; a <= 2; ++a) {
      for (std::int64_t b = -3; b <= 3; ++b) {
        EXPECT_NEAR(std::abs(fast.at({a, b}) - test::naive_coefficient(p, grid, {a, b})), 0.0, 1e-12);
      }
    }
  }
}

TEST(FftOracle, PreconditionsEnforced) {
  std::vector<std::size_t> even{4};
  std::vector<std::size_t> tight{3};
  EXPECT_THROW(fft_oracle(character({1}), even), ArgumentError);
  EXPECT_THROW(fft_oracle(character({2}), tight), AliasingError);
}

TEST(Parseval, RandomPairs) {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    std::size_t dim = 1 + rng() % 3;
    TrigPoly p = random_trig_poly(rng, dim, 4, 6);
    TrigPoly q = random_trig_poly(rng, dim, 4, 6);
    CoeffFunction ph = fourier(p), qh = fourier(q);
    Complex sum{};
    for (const auto& [k, c] : ph.coeffs()) sum += std::conj(c) * qh.at(k);
    EXPECT_LE(std::abs(haar_integral(mul(conj(p), q)) - sum), 1e-12);
  }
}

TEST(Quadrature, GridMeanMatchesHaar) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t dim = 1 + rng() % 2;
    TrigPoly p = random_trig_poly(rng, dim, 4, 8);
    std::vector<std::size_t> grid(dim, 11);
    std::vector<Complex> samples = sample_grid(p, grid);
    Complex mean{};
    for (Complex s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    EXPECT_LE(std::abs(mean - haar_integral(p)), 1e-9);
  }
}

TEST(Series, PrunesCancelledTerms) {
  TrigPoly p = character({1});
  p.add_term({1}, -1.0);
  EXPECT_TRUE(p.empty());
  EXPECT_THROW(p.add_term({1, 2}, 1.0), ArgumentError);
}

TEST(Series, MultiplicationOverflowDetected) {
  TrigPoly big = character({std::numeric_limits<std::int64_t>::max()});
  EXPECT_THROW(mul(big, big), std::overflow_error);
}

}  // namespace
}  // namespace looptx
