#include "looptx/holonomy.hpp"

#include <cmath>
#include <numbers>

#include "looptx/errors.hpp"

namespace looptx {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

}  // namespace

U1Element::U1Element(double angle) : angle_(wrap_angle(angle)) {}

SU2Element::SU2Element(const Eigen::Matrix2cd& m) {
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()(1) <= 1e-300) throw ArgumentError("SU(2) input is singular");
  Eigen::Matrix2cd w = svd.matrixU() * svd.matrixV().adjoint();
  m_ = w / std::sqrt(w.determinant());
}

SU2Element SU2Element::diagonal_phase(double phi) {
  Eigen::Matrix2cd m;
  m << std::polar(1.0, phi), 0.0, 0.0, std::polar(1.0, -phi);
  return SU2Element(m, Unchecked{});
}

SU2Element SU2Element::from_quaternion(double a, double b, double c, double d) {
  double norm = std::sqrt(a * a + b * b + c * c + d * d);
  if (norm == 0.0) throw ArgumentError("zero quaternion");
  a /= norm;
  b /= norm;
  c /= norm;
  d /= norm;
  Eigen::Matrix2cd m;
  m << Complex(a, b), Complex(c, d), Complex(-c, d), Complex(a, -b);
  return SU2Element(m, Unchecked{});
}

SU2Element operator*(const SU2Element& a, const SU2Element& b) {
  return SU2Element(a.m_ * b.m_, SU2Element::Unchecked{});
}

SU2Element inverse(const SU2Element& a) {
  return SU2Element(a.m_.adjoint(), SU2Element::Unchecked{});
}

GaugeGroup group_of(const GroupElement& g) {
  return std::holds_alternative<U1Element>(g) ? GaugeGroup::u1 : GaugeGroup::su2;
}

GroupElement identity_element(GaugeGroup group) {
  if (group == GaugeGroup::u1) return U1Element{};
  return SU2Element{};
}

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (group_of(a) != group_of(b)) throw ArgumentError("mixed group elements");
  if (auto* ua = std::get_if<U1Element>(&a)) {
    return U1Element(ua->angle() + std::get<U1Element>(b).angle());
  }
  return std::get<SU2Element>(a) * std::get<SU2Element>(b);
}

GroupElement inverse(const GroupElement& a) {
  if (auto* ua = std::get_if<U1Element>(&a)) return U1Element(-ua->angle());
  return inverse(std::get<SU2Element>(a));
}

double distance(const GroupElement& a, const GroupElement& b) {
  if (group_of(a) != group_of(b)) throw ArgumentError("mixed group elements");
  if (auto* ua = std::get_if<U1Element>(&a)) {
    double d = std::fabs(ua->angle() - std::get<U1Element>(b).angle());
    return std::min(d, kTwoPi - d);
  }
  return (std::get<SU2Element>(a).matrix() - std::get<SU2Element>(b).matrix())
      .cwiseAbs()
      .maxCoeff();
}

Connection::Connection(const Graph& graph, GaugeGroup group,
                       std::vector<GroupElement> assignment)
    : graph_(&graph), group_(group), assignment_(std::move(assignment)) {
  if (assignment_.size() != graph.edge_count()) {
    throw ArgumentError("connection must assign exactly one element per edge");
  }
  for (const GroupElement& g : assignment_) {
    if (group_of(g) != group_) throw ArgumentError("connection mixes group types");
  }
}

GroupElement holonomy(const Connection& a, const Word& w) {
  validate(a.graph(), w);
  if (a.group() == GaugeGroup::u1) {
    // Sum the angles and wrap once; avoids accumulating wrap error on long words.
    double total = 0.0;
    for (const Step& s : w.steps) {
      total += s.orientation * std::get<U1Element>(a.at(s.edge)).angle();
    }
    return U1Element(total);
  }
  SU2Element m;
  for (const Step& s : w.steps) {
    const SU2Element& u = std::get<SU2Element>(a.at(s.edge));
    m = s.orientation > 0 ? m * u : m * inverse(u);
  }
  return m;
}

Complex wilson(const Connection& a, const Word& w) {
  if (w.kind != WordKind::loop) throw ArgumentError("Wilson functions are defined on loops");
  GroupElement h = holonomy(a, w);
  if (auto* u = std::get_if<U1Element>(&h)) return u->value();
  return 0.5 * std::get<SU2Element>(h).matrix().trace();
}

Connection interpolate(const Graph& g, const GeneratorBasis& basis,
                       const std::vector<GroupElement>& targets) {
  if (targets.size() != basis.rank()) {
    throw ArgumentError("interpolate needs " + std::to_string(basis.rank()) + " targets, got " +
                        std::to_string(targets.size()));
  }
  GaugeGroup group = targets.empty() ? GaugeGroup::u1 : group_of(targets.front());
  std::vector<GroupElement> assignment(g.edge_count(), identity_element(group));
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (group_of(targets[i]) != group) throw ArgumentError("targets mix group types");
    assignment[basis.chords[i]] = targets[i];
  }
  return Connection(g, group, std::move(assignment));
}

double mandelstam_check(const Connection& a, const Word& alpha, const Word& beta) {
  if (a.group() != GaugeGroup::su2) {
    throw ArgumentError("the Mandelstam identity is checked for SU(2) connections");
  }
  const Graph& g = a.graph();
  Complex ta = wilson(a, alpha);
  Complex tb = wilson(a, beta);
  Complex tab = wilson(a, compose(g, alpha, beta));
  Complex tabinv = wilson(a, compose(g, alpha, invert(g, beta)));
  return std::abs(2.0 * ta * tb - tab - tabinv);
}

double conjugation_invariance_check(const Connection& a, const GroupElement& g0, const Word& w) {
  if (group_of(g0) != a.group()) throw ArgumentError("g0 is in the wrong group");
  // Conjugation is the identity map in an Abelian group.
  if (a.group() == GaugeGroup::u1) return 0.0;
  GroupElement g0inv = inverse(g0);
  std::vector<GroupElement> conjugated;
  conjugated.reserve(a.assignment().size());
  for (const GroupElement& u : a.assignment()) {
    conjugated.push_back(multiply(multiply(g0, u), g0inv));
  }
  Connection b(a.graph(), a.group(), std::move(conjugated));
  return std::abs(wilson(b, w) - wilson(a, w));
}

}  // namespace looptx
