#pragma once

// Harmonic analysis on the torus U(1)^n.
//
// A trigonometric polynomial is stored by its finitely many Fourier
// coefficients; point values are derived from them. The sampled-grid FFT is
// an independent cross-check of the coefficient representation, not the
// engine.

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "looptx/graph.hpp"

namespace looptx {

using Complex = std::complex<double>;

/// Coefficients with modulus at or below this are dropped.
inline constexpr double kPruneTolerance = 1e-15;

/// Finitely supported map Z^dim -> C. Tag distinguishes the function side
/// (TrigPoly) from the Fourier side (CoeffFunction) and functionals.
template <class Tag>
class LatticeSeries {
 public:
  using Map = std::map<HoopVector, Complex>;

  LatticeSeries() = default;
  explicit LatticeSeries(std::size_t dim) : dim_(dim) {}
  LatticeSeries(std::size_t dim, const Map& coeffs) : dim_(dim) {
    for (const auto& [k, c] : coeffs) add_term(k, c);
  }

  /// Single unit coefficient at k: a character on the function side, a point
  /// mass on the Fourier side.
  static LatticeSeries unit(const HoopVector& k) {
    LatticeSeries s(k.size());
    s.add_term(k, 1.0);
    return s;
  }

  static LatticeSeries constant(std::size_t dim, Complex c) {
    LatticeSeries s(dim);
    s.add_term(HoopVector(dim, 0), c);
    return s;
  }

  std::size_t dim() const { return dim_; }
  const Map& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  Complex at(const HoopVector& k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Complex{} : it->second;
  }

  /// Accumulates c at k, pruning the entry if it cancels.
  void add_term(const HoopVector& k, Complex c);

 private:
  std::size_t dim_ = 0;
  Map coeffs_;
};

struct TrigPolyTag;
struct CoeffFunctionTag;

using TrigPoly = LatticeSeries<TrigPolyTag>;
using CoeffFunction = LatticeSeries<CoeffFunctionTag>;

void check_lattice_point(std::size_t dim, const HoopVector& k);

template <class Tag>
void LatticeSeries<Tag>::add_term(const HoopVector& k, Complex c) {
  check_lattice_point(dim_, k);
  auto [it, inserted] = coeffs_.try_emplace(k, Complex{});
  it->second += c;
  if (std::abs(it->second) <= kPruneTolerance) coeffs_.erase(it);
}

/// Largest coefficient discrepancy over the union of supports.
template <class Tag>
double max_abs_difference(const LatticeSeries<Tag>& a, const LatticeSeries<Tag>& b) {
  double worst = 0.0;
  for (const auto& [k, c] : a.coeffs()) worst = std::max(worst, std::abs(c - b.at(k)));
  for (const auto& [k, c] : b.coeffs()) worst = std::max(worst, std::abs(c - a.at(k)));
  return worst;
}

/// Sum of squared coefficient moduli.
template <class Tag>
double norm_squared(const LatticeSeries<Tag>& s) {
  double total = 0.0;
  for (const auto& [k, c] : s.coeffs()) total += std::norm(c);
  return total;
}

TrigPoly add(const TrigPoly& p, const TrigPoly& q);
TrigPoly scale(const TrigPoly& p, Complex factor);
/// Coefficient convolution.
TrigPoly mul(const TrigPoly& p, const TrigPoly& q);
/// Pointwise complex conjugate: index negation plus coefficient conjugation.
TrigPoly conj(const TrigPoly& p);

/// Integral against normalized Haar measure (the zero coefficient).
Complex haar_integral(const TrigPoly& p);

/// Antilinear in the first argument.
Complex inner_product(const TrigPoly& p, const TrigPoly& q);

Complex eval_at(const TrigPoly& p, std::span<const double> theta);

TrigPoly character(const HoopVector& k);

CoeffFunction fourier(const TrigPoly& p);
TrigPoly inverse_fourier(const CoeffFunction& c);

/// Largest |k_axis| over the support, per axis.
std::vector<std::int64_t> bandwidth(const TrigPoly& p);

/// Samples p on the uniform odd grid 2 pi j / N per axis (row-major, last
/// axis fastest). Throws AliasingError if some N <= 2 * bandwidth.
std::vector<Complex> sample_grid(const TrigPoly& p, std::span<const std::size_t> grid);

/// Recovers coefficients from grid samples with a discrete Fourier transform.
CoeffFunction fft_oracle(const TrigPoly& p, std::span<const std::size_t> grid);
CoeffFunction fft_oracle(const TrigPoly& p, std::size_t grid_per_axis);

}  // namespace looptx
