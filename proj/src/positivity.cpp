#include "looptx/positivity.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "looptx/checked.hpp"
#include "looptx/errors.hpp"

namespace looptx {

namespace {

template <class Tag>
bool hermitian_symmetric(const LatticeSeries<Tag>& s) {
  double scale = 1.0;
  for (const auto& [k, c] : s.coeffs()) scale = std::max(scale, std::abs(c));
  HoopVector neg(s.dim());
  for (const auto& [k, c] : s.coeffs()) {
    for (std::size_t i = 0; i < k.size(); ++i) neg[i] = checked_neg(k[i]);
    if (std::abs(s.at(neg) - std::conj(c)) > kHermitianTolerance * scale) return false;
  }
  return true;
}

struct Derivatives {
  double value = 0.0;
  Eigen::VectorXd gradient;
  Eigen::MatrixXd hessian;
};

Derivatives differentiate(const TrigPoly& p, const Eigen::VectorXd& theta) {
  const auto n = static_cast<Eigen::Index>(p.dim());
  Derivatives d;
  d.gradient = Eigen::VectorXd::Zero(n);
  d.hessian = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd k(n);
  for (const auto& [kk, c] : p.coeffs()) {
    for (Eigen::Index a = 0; a < n; ++a) k[a] = static_cast<double>(kk[a]);
    Complex term = c * std::polar(1.0, k.dot(theta));
    d.value += term.real();
    // d/dθ_a e^{ik·θ} = i k_a e^{ik·θ}; Re(i z) = -Im z.
    d.gradient -= term.imag() * k;
    d.hessian -= term.real() * (k * k.transpose());
  }
  return d;
}

double real_value(const TrigPoly& p, const Eigen::VectorXd& theta) {
  return eval_at(p, std::span<const double>(theta.data(), static_cast<std::size_t>(theta.size())))
      .real();
}

// Local descent from a grid point; only ever lowers the value.
GridMinimum polish(const TrigPoly& p, Eigen::VectorXd theta) {
  double value = real_value(p, theta);
  for (int iter = 0; iter < 60; ++iter) {
    Derivatives d = differentiate(p, theta);
    if (d.gradient.norm() < 1e-14) break;
    Eigen::VectorXd step;
    Eigen::LLT<Eigen::MatrixXd> llt(d.hessian);
    if (llt.info() == Eigen::Success && d.hessian.size() > 0 &&
        d.hessian.diagonal().minCoeff() > 0.0) {
      step = -llt.solve(d.gradient);
    } else {
      step = -d.gradient / std::max(1.0, d.hessian.cwiseAbs().maxCoeff());
    }
    double t = 1.0;
    bool moved = false;
    for (int backtrack = 0; backtrack < 40; ++backtrack, t *= 0.5) {
      Eigen::VectorXd trial = theta + t * step;
      double v = real_value(p, trial);
      if (v < value) {
        theta = trial;
        value = v;
        moved = true;
        break;
      }
    }
    if (!moved || (t * step).norm() < 1e-15) break;
  }
  return {value, std::vector<double>(theta.data(), theta.data() + theta.size())};
}

}  // namespace

bool is_hermitian(const TrigPoly& p) { return hermitian_symmetric(p); }
bool is_hermitian(const CharacterFunctional& f) { return hermitian_symmetric(f); }

MeasureDensity::MeasureDensity(TrigPoly density) : density_(std::move(density)) {
  if (!is_hermitian(density_)) {
    throw ArgumentError("density coefficients are not Hermitian; the density is not real");
  }
}

CharacterFunctional functional_from_density(const MeasureDensity& p) {
  // ∫ conj(χ_k) p dμ₀ is the k-th coefficient of p.
  CharacterFunctional f(p.density().dim());
  for (const auto& [k, c] : p.density().coeffs()) f.add_term(k, c);
  return f;
}

MeasureDensity density_from_functional(const CharacterFunctional& f) {
  if (!is_hermitian(f)) {
    throw ArgumentError("functional is not Hermitian; no positive measure induces it");
  }
  TrigPoly p(f.dim());
  for (const auto& [k, c] : f.coeffs()) p.add_term(k, c);
  return MeasureDensity(std::move(p));
}

double psd_test(const CharacterFunctional& f, std::span<const HoopVector> window) {
  const auto size = static_cast<Eigen::Index>(window.size());
  if (size == 0) return std::numeric_limits<double>::infinity();
  Eigen::MatrixXcd m(size, size);
  HoopVector diff(f.dim());
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      const HoopVector& ki = window[static_cast<std::size_t>(i)];
      const HoopVector& kj = window[static_cast<std::size_t>(j)];
      check_lattice_point(f.dim(), ki);
      check_lattice_point(f.dim(), kj);
      for (std::size_t a = 0; a < diff.size(); ++a) diff[a] = checked_add(ki[a], checked_neg(kj[a]));
      m(i, j) = f.at(diff);
    }
  }
  // Hermitian part: the quadratic form Σ c̄_i c_j ℓ(k_i - k_j) only sees it.
  Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

std::vector<HoopVector> box_window(std::span<const std::int64_t> extent) {
  std::vector<HoopVector> points{HoopVector{}};
  for (std::int64_t e : extent) {
    std::vector<HoopVector> next;
    for (const HoopVector& prefix : points) {
      for (std::int64_t v = 0; v <= e; ++v) {
        HoopVector k = prefix;
        k.push_back(v);
        next.push_back(std::move(k));
      }
    }
    points = std::move(next);
  }
  return points;
}

GridMinimum grid_minimum(const MeasureDensity& p, std::span<const std::size_t> grid) {
  const TrigPoly& density = p.density();
  std::vector<Complex> samples = sample_grid(density, grid);
  if (density.dim() == 0) return {samples.front().real(), {}};

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t seeds = std::min<std::size_t>(4, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(seeds), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      return samples[a].real() < samples[b].real();
                    });

  auto theta_of = [&](std::size_t flat) {
    Eigen::VectorXd theta(static_cast<Eigen::Index>(grid.size()));
    for (std::size_t a = grid.size(); a-- > 0;) {
      theta[static_cast<Eigen::Index>(a)] =
          2.0 * std::numbers::pi * static_cast<double>(flat % grid[a]) /
          static_cast<double>(grid[a]);
      flat /= grid[a];
    }
    return theta;
  };

  GridMinimum best{samples[order.front()].real(), {}};
  {
    Eigen::VectorXd t = theta_of(order.front());
    best.theta.assign(t.data(), t.data() + t.size());
  }
  for (std::size_t s = 0; s < seeds; ++s) {
    GridMinimum local = polish(density, theta_of(order[s]));
    if (local.value < best.value) best = std::move(local);
  }
  return best;
}

double grid_positivity_test(const MeasureDensity& p, std::span<const std::size_t> grid) {
  return grid_minimum(p, grid).value;
}

ContinuityReport l2_continuity_report(const MeasureDensity& p, const TrigPoly& psi,
                                      std::span<const std::size_t> grid) {
  if (psi.dim() != p.density().dim()) throw ArgumentError("ψ and the density differ in dimension");
  if (grid_positivity_test(p, grid) < -1e-9) {
    throw ArgumentError("the continuity bound needs a nonnegative density");
  }
  const TrigPoly& density = p.density();
  TrigPoly weighted = mul(psi, density);
  double psi_norm_sq = haar_integral(mul(conj(psi), weighted)).real();
  ContinuityReport report;
  report.bound = std::sqrt(std::max(0.0, psi_norm_sq)) * std::sqrt(std::max(0.0, p.total_mass()));
  for (const auto& [k, c] : weighted.coeffs()) {
    report.max_value = std::max(report.max_value, std::abs(c));
  }
  report.holds = report.max_value <= report.bound + 1e-9;
  return report;
}

bool l2_continuity_check(const MeasureDensity& p, const TrigPoly& psi,
                         std::span<const std::size_t> grid) {
  return l2_continuity_report(p, psi, grid).holds;
}

}  // namespace looptx
