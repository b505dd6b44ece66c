#include "looptx/cli.hpp"

#include <openssl/evp.h>

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include "looptx/errors.hpp"
#include "looptx/suites.hpp"

namespace looptx::cli {

namespace {

struct Inputs {
  std::string graph;
  std::string word;
  std::string poly;
  std::string level;
  std::string connection;
  std::string state;
  std::string targets;
  std::string window;
  std::string group = "U1";
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  std::size_t trials = 1000;
  std::size_t grid = 65;
  std::string out;
};

struct Check {
  std::string name;
  Json value;
  double tolerance = 0.0;
  bool pass = false;
};

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(std::string name, Json value, double tolerance, bool pass) {
    checks_.push_back({std::move(name), std::move(value), tolerance, pass});
  }

  /// Residual check honouring a --tol override.
  void residual(std::string name, double value, double tolerance,
                const std::optional<double>& override_tol) {
    double tol = override_tol.value_or(tolerance);
    add(std::move(name), value, tol, value <= tol);
  }

  void add_suite_checks(const SuiteResult& suite, const std::optional<double>& override_tol,
                        bool with_budget) {
    const std::string prefix =
        "criterion " + std::to_string(suite.criterion) + " (" + suite.name + "): ";
    for (const CheckResult& c : suite.checks) {
      bool overridable = !c.lower_bound && c.tolerance > 0.0;
      if (overridable && override_tol) {
        add(prefix + c.name, c.value, *override_tol, c.value <= *override_tol);
      } else {
        add(prefix + c.name, c.value, c.tolerance, c.pass);
      }
    }
    if (with_budget) {
      add(prefix + "runtime below " + std::to_string(static_cast<int>(suite.budget_seconds)) + " s",
          suite.seconds, suite.budget_seconds, suite.within_budget());
    }
  }

  Json& data() { return data_; }
  bool passed() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  Json to_json(const std::string& inputs_digest, std::uint64_t seed, double runtime_ms) const {
    Json results = Json::array();
    for (const Check& c : checks_) {
      results.push_back(
          {{"check", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    }
    Json j = {{"command", command_},   {"inputs_digest", inputs_digest},
              {"results", results},    {"seed", seed},
              {"runtime_ms", runtime_ms}, {"pass", passed()}};
    if (!data_.is_null()) j["data"] = data_;
    return j;
  }

 private:
  std::string command_;
  std::vector<Check> checks_;
  Json data_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json load_json(const std::string& arg, const char* flag) {
  if (arg.empty()) throw UsageError(std::string("missing required ") + flag);
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return Json::parse(arg);
  }
  std::ifstream in(arg);
  if (!in) throw UsageError(std::string("cannot read ") + flag + " file '" + arg + "'");
  return Json::parse(in);
}

Graph theta_graph() {
  return Graph({"v0", "v1"}, {{"e1", "v0", "v1"}, {"e2", "v0", "v1"}, {"e3", "v0", "v1"}}, "v0");
}

double suite_scale(std::size_t trials, std::size_t base) {
  return static_cast<double>(trials) / static_cast<double>(base);
}

void write_table(const std::string& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n' << std::setprecision(17);
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

template <class Series>
void write_series_table(const std::string& path, const Series& s, const char* index_name) {
  std::vector<std::string> header;
  for (std::size_t a = 0; a < s.dim(); ++a) header.push_back(index_name + std::to_string(a));
  header.insert(header.end(), {"re", "im"});
  std::vector<std::vector<double>> rows;
  for (const auto& [k, c] : s.coeffs()) {
    std::vector<double> row(k.begin(), k.end());
    row.push_back(c.real());
    row.push_back(c.imag());
    rows.push_back(std::move(row));
  }
  write_table(path, header, rows);
}

void write_data_json(const std::string& path, const Json& data) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << data.dump(2) << '\n';
}

// --- subcommands -----------------------------------------------------------

void cmd_generators(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  GeneratorBasis basis = spanning_tree_generators(g);
  r.data() = to_json(g, basis);
  const auto expected = static_cast<std::int64_t>(g.edge_count()) -
                        static_cast<std::int64_t>(g.vertex_count()) + 1;
  r.add("rank = |E| - |V| + 1", basis.rank(), 0.0,
        static_cast<std::int64_t>(basis.rank()) == expected);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (decompose(g, basis.generators[i], basis) != GeneratorWord{{i, 1}}) ++bad;
  }
  r.add("each generator decomposes to itself", bad, 0.0, bad == 0);
}

void cmd_decompose(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  Word w = word_from_json(g, load_json(in.word, "--word"));
  GeneratorBasis basis = spanning_tree_generators(g);
  GeneratorWord letters = decompose(g, w, basis);
  r.data() = {{"generators", to_json(letters)}, {"word", to_json(g, w)}};
  bool round_trip = substitute(g, letters, basis) == reduce(g, w);
  r.add("back-substitution reproduces the reduced word", round_trip, 0.0, round_trip);
}

void cmd_abelianize(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  Word w = word_from_json(g, load_json(in.word, "--word"));
  GeneratorBasis basis = spanning_tree_generators(g);
  HoopVector v = abelianize(g, w, basis);
  HoopVector vinv = abelianize(g, invert(g, w), basis);
  bool negates = true;
  for (std::size_t i = 0; i < v.size(); ++i) negates = negates && vinv[i] == -v[i];
  r.data() = {{"hoop", v}, {"edge_counts", path_abelianize(g, w)}};
  r.add("abelianize(w⁻¹) = -abelianize(w)", v, 0.0, negates);
}

void cmd_kernel_test(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  Word w = word_from_json(g, load_json(in.word, "--word"));
  GeneratorBasis basis = spanning_tree_generators(g);
  HoopVector v = abelianize(g, w, basis);
  r.add("kernel-test", v, 0.0, kernel_test(g, w, basis));
}

std::vector<GroupElement> load_targets(const Inputs& in, const Graph& g,
                                       const GeneratorBasis& basis, Rng& rng) {
  std::vector<GroupElement> targets;
  if (!in.targets.empty()) {
    Json j = load_json(in.targets, "--targets");
    GaugeGroup group = group_from_string(j.value("group", std::string("U1")));
    for (const Json& t : j.at("targets")) targets.push_back(group_element_from_json(group, t));
    return targets;
  }
  GaugeGroup group = group_from_string(in.group);
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (group == GaugeGroup::u1) {
      targets.emplace_back(random_u1(rng));
    } else {
      targets.emplace_back(random_su2(rng));
    }
  }
  (void)g;
  return targets;
}

void cmd_interpolate(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  GeneratorBasis basis = spanning_tree_generators(g);
  Rng rng(in.seed);
  std::vector<GroupElement> targets = load_targets(in, g, basis, rng);
  Connection a = interpolate(g, basis, targets);
  double worst = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    worst = std::max(worst, distance(holonomy(a, basis.generators[i]), targets[i]));
  }
  r.data() = {{"connection", to_json(a)}};
  r.residual("max distance holonomy(beta_i) to target", worst, 1e-12, in.tol);
}

void cmd_holonomy(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  Word w = word_from_json(g, load_json(in.word, "--word"));
  Connection a = connection_from_json(g, load_json(in.connection, "--connection"));
  GroupElement h = holonomy(a, w);
  r.data() = {{"holonomy", to_json(h)}};
  if (w.kind == WordKind::loop) {
    Complex t = wilson(a, w);
    r.data()["wilson"] = complex_to_json(t);
    r.add("|wilson| <= 1", std::abs(t), 1e-12, std::abs(t) <= 1.0 + 1e-12);
    Rng rng(in.seed);
    GroupElement g0 = a.group() == GaugeGroup::u1 ? GroupElement(random_u1(rng))
                                                  : GroupElement(random_su2(rng));
    r.residual("conjugation invariance", conjugation_invariance_check(a, g0, w), 1e-10, in.tol);
  }
}

void cmd_mandelstam(const Inputs& in, Report& r) {
  if (in.graph.empty()) {
    SuiteOptions options{in.seed, suite_scale(in.trials, 1000)};
    r.add_suite_checks(mandelstam_suite(options), in.tol, false);
    return;
  }
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  GeneratorBasis basis = spanning_tree_generators(g);
  Rng rng(in.seed);
  std::uniform_int_distribution<std::size_t> length(0, 12);
  double worst = 0.0;
  double conj_worst = 0.0;
  for (std::size_t t = 0; t < in.trials; ++t) {
    Connection a = random_connection(g, GaugeGroup::su2, rng);
    Word alpha = random_walk_loop(g, basis, rng, length(rng));
    Word beta = random_walk_loop(g, basis, rng, length(rng));
    worst = std::max(worst, mandelstam_check(a, alpha, beta));
    conj_worst = std::max(conj_worst, conjugation_invariance_check(a, random_su2(rng), alpha));
  }
  r.residual("max |2TaTb - Tab - Tab⁻¹|", worst, 1e-10, in.tol);
  r.residual("max conjugation invariance residual", conj_worst, 1e-10, in.tol);
}

void cmd_transform(const Inputs& in, Report& r) {
  CylinderFunction psi = cylinder_from_json(load_json(in.poly, "--poly"));
  LoopState state = loop_transform(psi);
  if (!in.graph.empty()) {
    Graph g = graph_from_json(load_json(in.graph, "--graph"));
    state = loop_transform(psi, spanning_tree_generators(g));
  }
  r.data() = {{"loop_state", to_json(state)}};
  r.residual("|‖Lpsi‖² - ‖psi‖²|",
             std::abs(norm_squared(state) - norm_squared(psi.poly())), 1e-12, in.tol);
  r.residual("L⁻¹∘L - id", cylinder_distance(inverse_transform(state), psi), 1e-12, in.tol);
  if (!in.out.empty()) write_series_table(in.out, state, "h");
}

void cmd_inverse_transform(const Inputs& in, Report& r) {
  LoopState state = loop_state_from_json(load_json(in.state.empty() ? in.poly : in.state, "--state"));
  CylinderFunction psi = inverse_transform(state);
  r.data() = {{"cylinder_function", to_json(psi)}};
  r.residual("L∘L⁻¹ - id", max_abs_difference(loop_transform(psi), state), 0.0, in.tol);
  if (!in.out.empty()) write_series_table(in.out, psi.poly(), "k");
}

void cmd_verify_diagram(const Inputs& in, Report& r) {
  if (in.poly.empty()) {
    SuiteOptions options{in.seed, suite_scale(in.trials, 1000)};
    r.add_suite_checks(inclusion_suite(options), in.tol, false);
    return;
  }
  CylinderFunction psi = cylinder_from_json(load_json(in.poly, "--poly"));
  Level fine = level_from_json(load_json(in.level, "--level"));
  std::optional<RefinementMatrix> k = refinement_matrix(psi.level(), fine);
  if (!k) throw RefinementError("the function's level is not contained in --level");
  CylinderFunction lifted = include_function(psi, fine);
  r.data() = {{"refinement", to_json(k->entries)}, {"included", to_json(lifted)}};
  r.residual("diagram F'∘i - j∘F", verify_diagram(psi, fine), 1e-12, in.tol);
  r.residual("| ‖i psi‖ - ‖psi‖ |",
             std::abs(std::sqrt(norm_squared(lifted.poly())) - std::sqrt(norm_squared(psi.poly()))),
             1e-12, in.tol);
  Rng rng(in.seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<std::vector<double>> points(16, std::vector<double>(fine.size()));
  for (auto& p : points) {
    for (double& t : p) t = angle(rng);
  }
  r.residual("point evaluation psi(Kᵀθ')", point_evaluation_residual(psi, fine, points), 1e-10,
             in.tol);
}

void cmd_verify_unitarity(const Inputs& in, Report& r) {
  SuiteOptions options{in.seed, suite_scale(in.trials, 1000)};
  r.add_suite_checks(unitarity_suite(options), in.tol, false);
}

void cmd_bochner(const Inputs& in, Report& r) {
  if (in.poly.empty()) {
    SuiteOptions options{in.seed, suite_scale(in.trials, 500)};
    r.add_suite_checks(bochner_suite(options), in.tol, false);
    return;
  }
  MeasureDensity p = density_from_json(load_json(in.poly, "--poly"));
  CharacterFunctional f = functional_from_density(p);
  std::vector<HoopVector> window;
  if (!in.window.empty()) {
    window = load_json(in.window, "--window").get<std::vector<HoopVector>>();
  } else {
    window = box_window(bandwidth(p.density()));
  }
  std::vector<std::size_t> grid(p.density().dim(), in.grid);
  double min_eig = psd_test(f, window);
  GridMinimum gmin = grid_minimum(p, grid);
  r.data() = {{"functional", to_json(f)},
              {"window", window},
              {"min_eigenvalue", min_eig},
              {"grid_minimum", gmin.value},
              {"argmin", gmin.theta},
              {"total_mass", p.total_mass()}};
  double floor = -in.tol.value_or(1e-9);
  r.add("psd_test min eigenvalue >= " + std::to_string(floor), min_eig, floor, min_eig >= floor);
  r.add("grid minimum >= " + std::to_string(floor), gmin.value, floor, gmin.value >= floor);

  if (!in.out.empty()) {
    std::vector<std::string> header;
    for (std::size_t a = 0; a < grid.size(); ++a) header.push_back("theta" + std::to_string(a));
    header.push_back("density");
    std::vector<Complex> samples = sample_grid(p.density(), grid);
    std::vector<std::vector<double>> rows;
    rows.reserve(samples.size());
    for (std::size_t flat = 0; flat < samples.size(); ++flat) {
      std::vector<double> row(grid.size());
      std::size_t rest = flat;
      for (std::size_t a = grid.size(); a-- > 0;) {
        row[a] = 2.0 * std::numbers::pi * static_cast<double>(rest % grid[a]) /
                 static_cast<double>(grid[a]);
        rest /= grid[a];
      }
      row.push_back(samples[flat].real());
      rows.push_back(std::move(row));
    }
    write_table(in.out, header, rows);
  }
}

void cmd_fft(const Inputs& in, Report& r) {
  if (in.poly.empty()) {
    SuiteOptions options{in.seed, suite_scale(in.trials, 500)};
    r.add_suite_checks(fourier_suite(options), in.tol, false);
    return;
  }
  TrigPoly p = trig_poly_from_json(load_json(in.poly, "--poly"));
  std::vector<std::size_t> grid(p.dim(), in.grid);
  CoeffFunction exact = fourier(p);
  CoeffFunction oracle = fft_oracle(p, grid);
  r.data() = {{"coefficients", to_json(exact)}, {"grid", grid}};
  r.residual("fft oracle vs coefficients", max_abs_difference(oracle, exact), 1e-9, in.tol);
  if (!in.out.empty()) write_series_table(in.out, oracle, "k");
}

void cmd_path_transform(const Inputs& in, Report& r) {
  Graph g = graph_from_json(load_json(in.graph, "--graph"));
  r.data() = Json::object();
  if (!in.poly.empty()) {
    CylinderFunction psi = cylinder_from_json(load_json(in.poly, "--poly"));
    LoopState state = path_transform(psi, g);
    r.data()["edge_state"] = to_json(state);
    r.residual("|‖Ppsi‖² - ‖psi‖²|", std::abs(norm_squared(state) - norm_squared(psi.poly())),
               1e-12, in.tol);
    if (!in.out.empty()) write_series_table(in.out, state, "e");
  }
  if (!in.word.empty()) {
    Word w = word_from_json(g, load_json(in.word, "--word"));
    HoopVector counts = path_abelianize(g, w);
    bool zero = std::all_of(counts.begin(), counts.end(), [](std::int64_t v) { return v == 0; });
    r.data()["edge_counts"] = counts;
    r.data()["in_kernel"] = zero;
  }
  if (in.poly.empty() && in.word.empty()) {
    SuiteOptions options{in.seed, suite_scale(in.trials, 300)};
    r.add_suite_checks(path_suite(options), in.tol, false);
  }
}

// Graph-specific smoke block for selftest.
void graph_checks(const Graph& g, std::uint64_t seed, Report& r) {
  GeneratorBasis basis = spanning_tree_generators(g);
  Rng rng(seed);
  const std::string prefix = "graph: ";
  const auto expected = static_cast<std::int64_t>(g.edge_count()) -
                        static_cast<std::int64_t>(g.vertex_count()) + 1;
  r.add(prefix + "rank law", basis.rank(), 0.0,
        static_cast<std::int64_t>(basis.rank()) == expected);

  std::size_t round_trip_failures = 0;
  std::size_t hom_failures = 0;
  for (int t = 0; t < 200; ++t) {
    Word w = random_walk_loop(g, basis, rng, 10);
    if (substitute(g, decompose(g, w, basis), basis) != reduce(g, w)) ++round_trip_failures;
    Word v = random_walk_loop(g, basis, rng, 6);
    HoopVector sum = abelianize(g, w, basis);
    HoopVector hv = abelianize(g, v, basis);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += hv[i];
    if (abelianize(g, compose(g, w, v), basis) != sum) ++hom_failures;
  }
  r.add(prefix + "decompose round trip failures", round_trip_failures, 0.0,
        round_trip_failures == 0);
  r.add(prefix + "abelianize homomorphism failures", hom_failures, 0.0, hom_failures == 0);

  std::size_t commutator_failures = 0;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    for (std::size_t j = 0; j < basis.rank(); ++j) {
      GeneratorWord c{{i, 1}, {j, 1}, {i, -1}, {j, -1}};
      if (!kernel_test(g, substitute(g, c, basis), basis)) ++commutator_failures;
    }
  }
  r.add(prefix + "commutators outside kernel", commutator_failures, 0.0, commutator_failures == 0);

  double interp = 0.0;
  double mandel = 0.0;
  for (int t = 0; t < 100; ++t) {
    std::vector<GroupElement> targets;
    for (std::size_t i = 0; i < basis.rank(); ++i) targets.emplace_back(random_su2(rng));
    Connection a = interpolate(g, basis, targets);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      interp = std::max(interp, distance(holonomy(a, basis.generators[i]), targets[i]));
    }
    Connection b = random_connection(g, GaugeGroup::su2, rng);
    mandel = std::max(mandel, mandelstam_check(b, random_walk_loop(g, basis, rng, 8),
                                               random_walk_loop(g, basis, rng, 8)));
  }
  r.add(prefix + "SU(2) interpolation exactness", interp, 1e-12, interp <= 1e-12);
  r.add(prefix + "Mandelstam residual", mandel, 1e-10, mandel <= 1e-10);
}

void cmd_selftest(const Inputs& in, Report& r, const std::vector<std::string>& registered) {
  auto start = std::chrono::steady_clock::now();
  Graph g = in.graph.empty() ? theta_graph() : graph_from_json(load_json(in.graph, "--graph"));
  graph_checks(g, in.seed, r);

  SuiteOptions options{in.seed, 1.0};
  for (const SuiteResult& suite : run_all_suites(options)) r.add_suite_checks(suite, in.tol, true);

  std::size_t missing = 0;
  for (const ManifestEntry& entry : manifest()) {
    if (std::find(registered.begin(), registered.end(), entry.subcommand) == registered.end()) {
      ++missing;
    }
  }
  r.add("manifest: subcommands missing from the CLI", missing, 0.0, missing == 0);
  double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.add("total runtime below 180 s", total, 180.0, total < 180.0);
}

}  // namespace

const std::vector<ManifestEntry>& manifest() {
  static const std::vector<ManifestEntry> entries = {
      {"generators", {"spanning_tree_generators", "decompose"}},
      {"decompose", {"reduce", "decompose", "substitute"}},
      {"abelianize", {"abelianize", "invert", "path_abelianize"}},
      {"kernel-test", {"kernel_test", "abelianize"}},
      {"interpolate", {"interpolate", "holonomy"}},
      {"holonomy", {"holonomy", "wilson", "conjugation_invariance_check"}},
      {"mandelstam-sweep", {"mandelstam_check", "compose", "conjugation_invariance_check"}},
      {"transform", {"loop_transform", "inverse_transform", "cylinder_distance"}},
      {"inverse-transform", {"inverse_transform", "loop_transform", "join_levels", "hnf_solve"}},
      {"verify-diagram",
       {"verify_diagram", "verify_chain", "include_function", "include_coeffs",
        "refinement_matrix", "point_evaluation_residual"}},
      {"verify-unitarity", {"cylinder_inner_product", "state_inner_product", "join_levels"}},
      {"bochner-check",
       {"functional_from_density", "density_from_functional", "psd_test", "grid_positivity_test",
        "l2_continuity_check"}},
      {"fft-crosscheck",
       {"fft_oracle", "fourier", "haar_integral", "inner_product", "eval_at", "mul", "conj"}},
      {"path-transform", {"path_transform", "path_abelianize", "chord_to_edge_matrix"}},
      {"selftest", {"run_all_suites", "is_independent"}},
  };
  return entries;
}

std::string digest(const Json& j) {
  const std::string text = j.dump();
  unsigned char hash[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(text.data(), text.size(), hash, &length, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(hash[i]);
  }
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Inputs in;
  CLI::App app{"Abelian loop transform toolkit", "looptx"};
  app.require_subcommand(1);

  std::vector<std::string> names;
  for (const ManifestEntry& entry : manifest()) names.push_back(entry.subcommand);
  for (const std::string& name : names) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--graph", in.graph, "graph JSON (file path or inline)");
    sub->add_option("--word", in.word, "word JSON");
    sub->add_option("--poly", in.poly, "polynomial / cylinder function / density JSON");
    sub->add_option("--level", in.level, "level JSON");
    sub->add_option("--connection", in.connection, "connection JSON");
    sub->add_option("--state", in.state, "loop state JSON");
    sub->add_option("--targets", in.targets, "interpolation targets JSON");
    sub->add_option("--window", in.window, "psd_test window: list of lattice points");
    sub->add_option("--group", in.group, "U1 or SU2 for random targets");
    sub->add_option("--seed", in.seed, "random seed")->capture_default_str();
    sub->add_option("--tol", in.tol, "override per-check tolerances");
    sub->add_option("--trials", in.trials, "sweep size")->capture_default_str();
    sub->add_option("--grid", in.grid, "odd grid size per axis")->capture_default_str();
    sub->add_option("--out", in.out, "write a data table to this file");
  }

  std::vector<const char*> argv{"looptx"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Report report(command);
  auto start = std::chrono::steady_clock::now();
  try {
    if (command == "generators") cmd_generators(in, report);
    else if (command == "decompose") cmd_decompose(in, report);
    else if (command == "abelianize") cmd_abelianize(in, report);
    else if (command == "kernel-test") cmd_kernel_test(in, report);
    else if (command == "interpolate") cmd_interpolate(in, report);
    else if (command == "holonomy") cmd_holonomy(in, report);
    else if (command == "mandelstam-sweep") cmd_mandelstam(in, report);
    else if (command == "transform") cmd_transform(in, report);
    else if (command == "inverse-transform") cmd_inverse_transform(in, report);
    else if (command == "verify-diagram") cmd_verify_diagram(in, report);
    else if (command == "verify-unitarity") cmd_verify_unitarity(in, report);
    else if (command == "bochner-check") cmd_bochner(in, report);
    else if (command == "fft-crosscheck") cmd_fft(in, report);
    else if (command == "path-transform") cmd_path_transform(in, report);
    else if (command == "selftest") cmd_selftest(in, report, names);
  } catch (const Json::exception& e) {
    err << "looptx " << command << ": malformed JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "looptx " << command << ": " << e.what() << '\n';
    return kExitUsage;
  }
  double runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json inputs = Json::object();
  auto record = [&](const char* key, const std::string& value) {
    if (value.empty()) return;
    try {
      inputs[key] = load_json(value, key);
    } catch (...) {
      inputs[key] = value;
    }
  };
  record("graph", in.graph);
  record("word", in.word);
  record("poly", in.poly);
  record("level", in.level);
  record("connection", in.connection);
  record("state", in.state);
  record("targets", in.targets);
  record("window", in.window);
  inputs["command"] = command;
  inputs["group"] = in.group;
  inputs["seed"] = in.seed;
  inputs["trials"] = in.trials;
  inputs["grid"] = in.grid;
  if (in.tol) inputs["tol"] = *in.tol;

  Json j = report.to_json(digest(inputs), in.seed, runtime_ms);
  out << j.dump(2) << '\n';
  if (!in.out.empty() && (command == "generators" || command == "decompose" ||
                          command == "abelianize" || command == "kernel-test" ||
                          command == "interpolate" || command == "holonomy" ||
                          command == "verify-diagram")) {
    write_data_json(in.out, j.value("data", Json::object()));
  }
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace looptx::cli
