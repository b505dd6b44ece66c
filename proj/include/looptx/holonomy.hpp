#pragma once

#include <complex>
#include <unordered_map>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "looptx/graph.hpp"

namespace looptx {

using Complex = std::complex<double>;

enum class GaugeGroup { u1, su2 };

/// e^{i angle} with the angle kept in [0, 2pi).
class U1Element {
 public:
  U1Element() = default;
  explicit U1Element(double angle);

  double angle() const { return angle_; }
  Complex value() const { return std::polar(1.0, angle_); }

 private:
  double angle_ = 0.0;
};

/// 2x2 special unitary matrix. The constructor projects its input onto SU(2)
/// once; products never renormalize.
class SU2Element {
 public:
  SU2Element() : m_(Eigen::Matrix2cd::Identity()) {}
  explicit SU2Element(const Eigen::Matrix2cd& m);

  static SU2Element diagonal_phase(double phi);
  /// Unit quaternion (a, b, c, d) -> [[a + ib, c + id], [-c + id, a - ib]].
  static SU2Element from_quaternion(double a, double b, double c, double d);

  const Eigen::Matrix2cd& matrix() const { return m_; }

 private:
  struct Unchecked {};
  SU2Element(const Eigen::Matrix2cd& m, Unchecked) : m_(m) {}
  friend SU2Element operator*(const SU2Element&, const SU2Element&);
  friend SU2Element inverse(const SU2Element&);

  Eigen::Matrix2cd m_;
};

SU2Element operator*(const SU2Element& a, const SU2Element& b);
SU2Element inverse(const SU2Element& a);

using GroupElement = std::variant<U1Element, SU2Element>;

GaugeGroup group_of(const GroupElement& g);
GroupElement identity_element(GaugeGroup group);
GroupElement multiply(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);

/// Angular distance for U(1); max-abs entry difference for SU(2).
double distance(const GroupElement& a, const GroupElement& b);

/// Assignment of one group element per edge of a graph.
class Connection {
 public:
  Connection(const Graph& graph, GaugeGroup group, std::vector<GroupElement> assignment);

  const Graph& graph() const { return *graph_; }
  GaugeGroup group() const { return group_; }
  const GroupElement& at(EdgeIndex e) const { return assignment_.at(e); }
  const std::vector<GroupElement>& assignment() const { return assignment_; }

 private:
  const Graph* graph_;
  GaugeGroup group_;
  std::vector<GroupElement> assignment_;
};

GroupElement holonomy(const Connection& a, const Word& w);

/// Normalized trace of the holonomy (the phase itself for U(1)).
Complex wilson(const Connection& a, const Word& w);

/// Tree edges -> identity, chord i -> targets[i].
Connection interpolate(const Graph& g, const GeneratorBasis& basis,
                       const std::vector<GroupElement>& targets);

/// |2 T_a T_b - T_{ab} - T_{ab^-1}| for an SU(2) connection.
double mandelstam_check(const Connection& a, const Word& alpha, const Word& beta);

/// |T_w under the connection conjugated by g0 - T_w|.
double conjugation_invariance_check(const Connection& a, const GroupElement& g0, const Word& w);

}  // namespace looptx
