#include "looptx/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "looptx/errors.hpp"

namespace looptx {

namespace {

using Clock = std::chrono::steady_clock;

Rng suite_rng(const SuiteOptions& options, int criterion) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                    static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(criterion)};
  return Rng(seq);
}

std::size_t count(const SuiteOptions& options, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(n * options.scale)));
}

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Graph with at least one independent cycle and at most 10 edges.
struct Sample {
  Graph graph;
  GeneratorBasis basis;
};

Sample random_sample(Rng& rng, std::size_t max_edges = 10) {
  Graph g = random_connected_graph(rng, max_edges, 1);
  GeneratorBasis basis = spanning_tree_generators(g);
  return {std::move(g), std::move(basis)};
}

std::vector<double> random_point(Rng& rng, std::size_t dim) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<double> theta(dim);
  for (double& t : theta) t = angle(rng);
  return theta;
}

class Timer {
 public:
  Timer() : start_(Clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_;
};

SuiteResult finish(int criterion, std::string name, std::vector<CheckResult> checks,
                   const Timer& timer, double budget) {
  return SuiteResult{criterion, std::move(name), std::move(checks), timer.seconds(), budget};
}

}  // namespace

CheckResult residual_check(std::string name, double value, double tolerance) {
  return {std::move(name), value, tolerance, false, value <= tolerance};
}

CheckResult margin_check(std::string name, double value, double threshold) {
  return {std::move(name), value, threshold, true, value > threshold};
}

CheckResult exact_check(std::string name, std::size_t violations) {
  return {std::move(name), static_cast<double>(violations), 0.0, false, violations == 0};
}

bool SuiteResult::passed() const {
  return within_budget() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

SuiteResult unitarity_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 1);
  double worst = 0.0;
  double worst_norm = 0.0;
  for (std::size_t t = 0, n = count(options, 1000); t < n; ++t) {
    Sample s = random_sample(rng);
    const std::size_t rank = s.basis.rank();
    Level fine = random_level(rng, rank, 1, rank, 3);
    Level l1 = random_sublevel(rng, fine, 1, fine.size(), 2);
    Level l2 = random_sublevel(rng, fine, 1, fine.size(), 2);
    CylinderFunction psi(l1, random_trig_poly(rng, l1.size(), 2, pick(rng, 1, 6)));
    TrigPoly phi_poly = random_trig_poly(rng, l2.size(), 2, pick(rng, 1, 6));
    CylinderFunction phi(l2, phi_poly);
    if (t % 4 == 0) {
      // Overlapping supports: φ = ψ seen at the finer level plus noise.
      CylinderFunction lifted = include_function(psi, fine);
      phi = CylinderFunction(fine, add(lifted.poly(), random_trig_poly(rng, fine.size(), 2, 3)));
    }
    LoopState lpsi = loop_transform(psi, s.basis);
    LoopState lphi = loop_transform(phi, s.basis);
    worst = std::max(worst, std::abs(state_inner_product(lpsi, lphi) -
                                     cylinder_inner_product(psi, phi)));
    worst_norm = std::max(worst_norm, std::abs(state_inner_product(lpsi, lpsi).real() -
                                               cylinder_inner_product(psi, psi).real()));
  }
  return finish(1, "loop transform unitarity",
                {residual_check("|<Lpsi,Lphi> - <psi,phi>|", worst, 1e-12),
                 residual_check("|‖Lpsi‖² - ‖psi‖²|", worst_norm, 1e-12)},
                timer, 30.0);
}

SuiteResult inclusion_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 2);
  double norm_residual = 0.0;
  double diagram_residual = 0.0;
  double eval_residual = 0.0;
  for (std::size_t t = 0, n = count(options, 1000); t < n; ++t) {
    const std::size_t ambient = pick(rng, 1, 5);
    Level fine = random_level(rng, ambient, 1, ambient, 3);
    Level coarse = random_sublevel(rng, fine, 1, fine.size(), 3);
    CylinderFunction psi(coarse, random_trig_poly(rng, coarse.size(), 3, pick(rng, 1, 8)));
    CylinderFunction lifted = include_function(psi, fine);
    norm_residual = std::max(norm_residual, std::abs(std::sqrt(norm_squared(lifted.poly())) -
                                                     std::sqrt(norm_squared(psi.poly()))));
    diagram_residual = std::max(diagram_residual, verify_diagram(psi, fine));
    std::vector<std::vector<double>> points{random_point(rng, fine.size()),
                                            random_point(rng, fine.size())};
    eval_residual = std::max(eval_residual, point_evaluation_residual(psi, fine, points));
  }

  double chain_residual = 0.0;
  std::size_t inconsistent = 0;
  for (std::size_t t = 0, n = count(options, 200); t < n; ++t) {
    const std::size_t ambient = pick(rng, 1, 6);
    Level top = random_level(rng, ambient, 1, ambient, 3);
    Level mid = random_sublevel(rng, top, 1, top.size(), 3);
    Level bottom = random_sublevel(rng, mid, 1, mid.size(), 3);
    CylinderFunction psi(bottom, random_trig_poly(rng, bottom.size(), 3, pick(rng, 1, 8)));
    ChainCheck chain = verify_chain(psi, mid, top);
    chain_residual = std::max({chain_residual, chain.residual, verify_diagram(psi, mid),
                               verify_diagram(include_function(psi, mid), top)});
    if (!chain.consistent) ++inconsistent;
  }
  return finish(2, "inclusion isometry and diagram commutation",
                {residual_check("| ‖i psi‖ - ‖psi‖ |", norm_residual, 1e-12),
                 residual_check("diagram F'∘i - j∘F", diagram_residual, 1e-12),
                 residual_check("point evaluation psi(Kᵀθ')", eval_residual, 1e-10),
                 residual_check("two-step chain coefficients", chain_residual, 1e-12),
                 exact_check("K(L'',L) != K(L'',L')K(L',L)", inconsistent)},
                timer, 30.0);
}

SuiteResult kernel_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 3);
  std::size_t kernel_misses = 0;
  double kernel_holonomy = 0.0;
  std::size_t abelian_mismatch = 0;
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    Sample s = random_sample(rng);
    auto rows = random_exponent_rows(rng, s.basis.rank(), pick(rng, 2, 4),
                                     HoopVector(s.basis.rank(), 0), 3);
    Word w = substitute(s.graph, product_shape_word(rows), s.basis);
    if (!kernel_test(s.graph, w, s.basis)) ++kernel_misses;
    for (int c = 0; c < 100; ++c) {
      Connection a = random_connection(s.graph, GaugeGroup::u1, rng);
      kernel_holonomy = std::max(kernel_holonomy, std::abs(wilson(a, w) - 1.0));
    }
  }

  std::size_t false_kernel = 0;
  double witness_margin = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    Sample s = random_sample(rng);
    const std::size_t rank = s.basis.rank();
    HoopVector sums(rank, 0);
    std::uniform_int_distribution<std::int64_t> q(-3, 3);
    for (auto& v : sums) v = q(rng);
    std::size_t forced = pick(rng, 0, rank - 1);
    if (sums[forced] == 0) sums[forced] = q(rng) >= 0 ? 1 : -1;
    auto rows = random_exponent_rows(rng, rank, pick(rng, 1, 4), sums, 3);
    Word w = substitute(s.graph, product_shape_word(rows), s.basis);
    if (kernel_test(s.graph, w, s.basis)) ++false_kernel;
    if (abelianize(s.graph, w, s.basis) != sums) ++abelian_mismatch;

    // Witness: put angle pi / Q_i on one generator with Q_i != 0.
    std::size_t i = static_cast<std::size_t>(
        std::find_if(sums.begin(), sums.end(), [](std::int64_t v) { return v != 0; }) -
        sums.begin());
    std::vector<GroupElement> targets(rank, U1Element{});
    targets[i] = U1Element(std::numbers::pi / static_cast<double>(sums[i]));
    Connection witness = interpolate(s.graph, s.basis, targets);
    witness_margin = std::min(witness_margin, std::abs(wilson(witness, w) - 1.0));
  }
  return finish(3, "kernel characterization",
                {exact_check("zero-sum words outside the kernel", kernel_misses),
                 residual_check("max |hol - 1| on kernel words", kernel_holonomy, 1e-10),
                 exact_check("nonzero-sum words inside the kernel", false_kernel),
                 exact_check("abelianize != row sums", abelian_mismatch),
                 margin_check("min |hol - 1| under witnesses", witness_margin, 0.1)},
                timer, 60.0);
}

SuiteResult interpolation_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 4);
  double worst_u1 = 0.0;
  double worst_su2 = 0.0;
  for (GaugeGroup group : {GaugeGroup::u1, GaugeGroup::su2}) {
    for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
      Sample s = random_sample(rng);
      std::vector<GroupElement> targets;
      for (std::size_t i = 0; i < s.basis.rank(); ++i) {
        if (group == GaugeGroup::u1) {
          targets.emplace_back(random_u1(rng));
        } else {
          targets.emplace_back(random_su2(rng));
        }
      }
      Connection a = interpolate(s.graph, s.basis, targets);
      double& worst = group == GaugeGroup::u1 ? worst_u1 : worst_su2;
      for (std::size_t i = 0; i < targets.size(); ++i) {
        worst = std::max(worst, distance(holonomy(a, s.basis.generators[i]), targets[i]));
      }
    }
  }
  return finish(4, "interpolation exactness",
                {residual_check("U(1) max distance", worst_u1, 1e-12),
                 residual_check("SU(2) max distance", worst_su2, 1e-12)},
                timer, 10.0);
}

SuiteResult mandelstam_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 5);
  double worst = 0.0;
  for (std::size_t t = 0, n = count(options, 1000); t < n; ++t) {
    Sample s = random_sample(rng);
    Connection a = random_connection(s.graph, GaugeGroup::su2, rng);
    Word alpha = random_walk_loop(s.graph, s.basis, rng, pick(rng, 0, 12));
    Word beta = random_walk_loop(s.graph, s.basis, rng, pick(rng, 0, 12));
    worst = std::max(worst, mandelstam_check(a, alpha, beta));
  }
  return finish(5, "Mandelstam identity",
                {residual_check("|2TaTb - Tab - Tab⁻¹|", worst, 1e-10)}, timer, 10.0);
}

SuiteResult fourier_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 6);
  double oracle = 0.0;
  double quadrature = 0.0;
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    const std::size_t dim = pick(rng, 1, 3);
    const auto band = static_cast<std::int64_t>(pick(rng, 0, 5));
    TrigPoly p = random_trig_poly(rng, dim, band, pick(rng, 1, 12));
    std::vector<std::int64_t> bw = bandwidth(p);
    std::vector<std::size_t> grid;
    for (std::int64_t b : bw) grid.push_back(static_cast<std::size_t>(2 * b + 1) + 2 * pick(rng, 0, 2));
    std::vector<Complex> samples = sample_grid(p, grid);
    Complex mean{};
    for (Complex v : samples) mean += v;
    mean /= static_cast<double>(samples.size());
    quadrature = std::max(quadrature, std::abs(mean - haar_integral(p)));
    oracle = std::max(oracle, max_abs_difference(fft_oracle(p, grid), fourier(p)));
  }
  double parseval = 0.0;
  for (std::size_t t = 0, n = count(options, 1000); t < n; ++t) {
    const std::size_t dim = pick(rng, 1, 3);
    TrigPoly p = random_trig_poly(rng, dim, 3, pick(rng, 1, 10));
    TrigPoly q = random_trig_poly(rng, dim, 3, pick(rng, 1, 10));
    Complex direct{};
    for (const auto& [k, c] : p.coeffs()) direct += std::conj(c) * q.at(k);
    parseval = std::max(parseval, std::abs(haar_integral(mul(conj(p), q)) - direct));
  }
  return finish(6, "Fourier correctness",
                {residual_check("fft oracle vs coefficients", oracle, 1e-9),
                 residual_check("grid mean vs Haar integral", quadrature, 1e-9),
                 residual_check("Parseval", parseval, 1e-12)},
                timer, 30.0);
}

SuiteResult bochner_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 7);
  double round_trip = 0.0;
  double min_eig = std::numeric_limits<double>::infinity();
  double min_grid = std::numeric_limits<double>::infinity();
  std::size_t continuity_failures = 0;
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    const std::size_t dim = pick(rng, 1, 2);
    const auto band = static_cast<std::int64_t>(pick(rng, 1, 2));
    MeasureDensity p(random_squared_modulus(rng, dim, band, pick(rng, 1, 4)));
    CharacterFunctional f = functional_from_density(p);
    round_trip = std::max(round_trip, max_abs_difference(density_from_functional(f).density(),
                                                         p.density()));

    // The full box window plus random windows of up to six points.
    std::vector<std::int64_t> extent(dim, 2 * band);
    min_eig = std::min(min_eig, psd_test(f, box_window(extent)));
    std::uniform_int_distribution<std::int64_t> coord(-2 * band, 2 * band);
    for (int w = 0; w < 10; ++w) {
      std::vector<HoopVector> window(pick(rng, 1, 6), HoopVector(dim));
      for (auto& k : window) {
        for (auto& x : k) x = coord(rng);
      }
      min_eig = std::min(min_eig, psd_test(f, window));
    }
    std::vector<std::size_t> grid(dim, static_cast<std::size_t>(4 * band + 3));
    min_grid = std::min(min_grid, grid_positivity_test(p, grid));
    if (!l2_continuity_check(p, random_trig_poly(rng, dim, 2, pick(rng, 1, 4)), grid)) {
      ++continuity_failures;
    }
  }

  // 2 cos θ: a real density that is not a positive measure.
  TrigPoly cosine(1);
  cosine.add_term({1}, 1.0);
  cosine.add_term({-1}, 1.0);
  MeasureDensity signed_density(cosine);
  std::vector<HoopVector> window{{0}, {1}};
  double signed_eig = psd_test(functional_from_density(signed_density), window);
  std::vector<std::size_t> grid{65};
  double signed_grid = grid_positivity_test(signed_density, grid);

  return finish(7, "Bochner correspondence",
                {residual_check("density <-> functional round trip", round_trip, 0.0),
                 margin_check("min window eigenvalue on |q|²", min_eig, -1e-9),
                 margin_check("min grid value on |q|²", min_grid, -1e-9),
                 exact_check("L² continuity bound violations", continuity_failures),
                 residual_check("2cosθ window eigenvalue vs -1", std::abs(signed_eig + 1.0), 1e-9),
                 residual_check("2cosθ grid minimum vs -2", std::abs(signed_grid + 2.0), 1e-9)},
                timer, 30.0);
}

SuiteResult round_trip_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 8);
  double forward = 0.0;
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    const std::size_t ambient = pick(rng, 1, 6);
    LoopState state = random_loop_state(rng, ambient, pick(rng, 1, 6), 4);
    forward = std::max(forward, max_abs_difference(loop_transform(inverse_transform(state)), state));
  }
  double backward = 0.0;
  for (std::size_t t = 0, n = count(options, 500); t < n; ++t) {
    const std::size_t ambient = pick(rng, 1, 6);
    Level level = random_level(rng, ambient, 1, ambient, 3);
    CylinderFunction psi(level, random_trig_poly(rng, level.size(), 2, pick(rng, 1, 6)));
    backward = std::max(backward, cylinder_distance(inverse_transform(loop_transform(psi)), psi));
  }
  return finish(8, "inverse transform round trips",
                {residual_check("L∘L⁻¹ - id", forward, 0.0),
                 residual_check("L⁻¹∘L - id after common refinement", backward, 0.0)},
                timer, 10.0);
}

SuiteResult path_suite(const SuiteOptions& options) {
  Timer timer;
  Rng rng = suite_rng(options, 9);
  std::size_t nonzero_kernel = 0;
  double kernel_character = 0.0;
  double transform_residual = 0.0;
  std::size_t edge_mismatch = 0;
  for (std::size_t t = 0, n = count(options, 300); t < n; ++t) {
    Sample s = random_sample(rng);
    const Graph& g = s.graph;

    // Kernel words p1^{k11} ... pn^{kn1} p1^{k12} ... with zero row sums,
    // built from closed paths at a common vertex so the powers compose.
    const VertexIndex at = pick(rng, 0, g.vertex_count() - 1);
    const std::size_t npaths = pick(rng, 1, 3);
    std::vector<Word> paths;
    for (std::size_t i = 0; i < npaths; ++i) {
      paths.push_back(random_closed_path(g, s.basis, rng, at, pick(rng, 1, 6)));
    }
    auto rows = random_exponent_rows(rng, npaths, pick(rng, 2, 4), HoopVector(npaths, 0), 3);
    Word kernel_word = empty_path(at);
    for (const GeneratorLetter& l : product_shape_word(rows)) {
      const Word& p = paths[l.index];
      kernel_word = compose(g, kernel_word, l.sign > 0 ? p : invert(g, p));
    }
    HoopVector counts = path_abelianize(g, kernel_word);
    if (std::any_of(counts.begin(), counts.end(), [](std::int64_t v) { return v != 0; })) {
      ++nonzero_kernel;
    }
    Connection a = random_connection(g, GaugeGroup::u1, rng);
    kernel_character = std::max(kernel_character, distance(holonomy(a, kernel_word), U1Element{}));

    // Two loops: transform on the hoop lattice, push to edges, compare with
    // the path transform of the same polynomial on their edge images.
    Word alpha = random_walk_loop(g, s.basis, rng, pick(rng, 1, 8));
    Word beta = random_walk_loop(g, s.basis, rng, pick(rng, 1, 8));
    std::vector<HoopVector> hoops;
    std::vector<HoopVector> edge_vectors;
    for (const Word* w : {&alpha, &beta}) {
      HoopVector h = abelianize(g, *w, s.basis);
      std::vector<HoopVector> trial = hoops;
      trial.push_back(h);
      if (!is_independent(trial)) continue;
      hoops.push_back(h);
      edge_vectors.push_back(path_abelianize(g, *w));
    }
    IntMatrix c = chord_to_edge_matrix(g, s.basis);
    for (std::size_t i = 0; i < hoops.size(); ++i) {
      if (c * hoops[i] != edge_vectors[i]) ++edge_mismatch;
    }
    TrigPoly poly = random_trig_poly(rng, hoops.size(), 2, pick(rng, 1, 6));
    CylinderFunction loop_psi(Level(s.basis.rank(), hoops), poly);
    CylinderFunction path_psi(Level(g.edge_count(), edge_vectors), poly);
    LoopState via_loops = pushforward(loop_transform(loop_psi, s.basis), c);
    transform_residual =
        std::max(transform_residual, max_abs_difference(path_transform(path_psi, g), via_loops));
  }
  return finish(9, "path transform consistency",
                {exact_check("kernel words with nonzero edge counts", nonzero_kernel),
                 residual_check("kernel words: |hol - 1| (trivial character)", kernel_character,
                                1e-10),
                 exact_check("path_abelianize != C·abelianize", edge_mismatch),
                 residual_check("path vs loop transform", transform_residual, 1e-12)},
                timer, 10.0);
}

std::vector<SuiteResult> run_all_suites(const SuiteOptions& options) {
  return {unitarity_suite(options),  inclusion_suite(options), kernel_suite(options),
          interpolation_suite(options), mandelstam_suite(options), fourier_suite(options),
          bochner_suite(options),    round_trip_suite(options), path_suite(options)};
}

}  // namespace looptx
