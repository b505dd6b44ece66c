#include "looptx/torus.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <numbers>
#include <string>

#include "looptx/checked.hpp"
#include "looptx/errors.hpp"

namespace looptx {

namespace {

void require_same_dim(const TrigPoly& p, const TrigPoly& q) {
  if (p.dim() != q.dim()) {
    throw ArgumentError("dimension mismatch: " + std::to_string(p.dim()) + " vs " +
                        std::to_string(q.dim()));
  }
}

struct FftwFree {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};

struct PlanDestroy {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};

using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using FftwPlan = std::unique_ptr<fftw_plan_s, PlanDestroy>;

}  // namespace

void check_lattice_point(std::size_t dim, const HoopVector& k) {
  if (k.size() != dim) {
    throw ArgumentError("lattice point has length " + std::to_string(k.size()) +
                        ", expected " + std::to_string(dim));
  }
}

TrigPoly add(const TrigPoly& p, const TrigPoly& q) {
  require_same_dim(p, q);
  TrigPoly r = p;
  for (const auto& [k, c] : q.coeffs()) r.add_term(k, c);
  return r;
}

TrigPoly scale(const TrigPoly& p, Complex factor) {
  TrigPoly r(p.dim());
  for (const auto& [k, c] : p.coeffs()) r.add_term(k, factor * c);
  return r;
}

TrigPoly mul(const TrigPoly& p, const TrigPoly& q) {
  require_same_dim(p, q);
  TrigPoly r(p.dim());
  HoopVector sum(p.dim());
  for (const auto& [k, a] : p.coeffs()) {
    for (const auto& [m, b] : q.coeffs()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = checked_add(k[i], m[i]);
      r.add_term(sum, a * b);
    }
  }
  return r;
}

TrigPoly conj(const TrigPoly& p) {
  TrigPoly r(p.dim());
  HoopVector neg(p.dim());
  for (const auto& [k, c] : p.coeffs()) {
    for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = checked_neg(k[i]);
    r.add_term(neg, std::conj(c));
  }
  return r;
}

Complex haar_integral(const TrigPoly& p) { return p.at(HoopVector(p.dim(), 0)); }

Complex inner_product(const TrigPoly& p, const TrigPoly& q) {
  require_same_dim(p, q);
  Complex total{};
  const TrigPoly& small = p.size() <= q.size() ? p : q;
  const TrigPoly& other = p.size() <= q.size() ? q : p;
  for (const auto& [k, c] : small.coeffs()) {
    Complex d = other.at(k);
    total += (&small == &p) ? std::conj(c) * d : std::conj(d) * c;
  }
  return total;
}

Complex eval_at(const TrigPoly& p, std::span<const double> theta) {
  if (theta.size() != p.dim()) throw ArgumentError("evaluation point has the wrong dimension");
  Complex total{};
  for (const auto& [k, c] : p.coeffs()) {
    double phase = 0.0;
    for (std::size_t i = 0; i < k.size(); ++i) phase += static_cast<double>(k[i]) * theta[i];
    total += c * std::polar(1.0, phase);
  }
  return total;
}

TrigPoly character(const HoopVector& k) { return TrigPoly::unit(k); }

CoeffFunction fourier(const TrigPoly& p) {
  CoeffFunction c(p.dim());
  for (const auto& [k, v] : p.coeffs()) c.add_term(k, v);
  return c;
}

TrigPoly inverse_fourier(const CoeffFunction& c) {
  TrigPoly p(c.dim());
  for (const auto& [k, v] : c.coeffs()) p.add_term(k, v);
  return p;
}

std::vector<std::int64_t> bandwidth(const TrigPoly& p) {
  std::vector<std::int64_t> band(p.dim(), 0);
  for (const auto& [k, c] : p.coeffs()) {
    for (std::size_t i = 0; i < k.size(); ++i) {
      band[i] = std::max(band[i], k[i] < 0 ? checked_neg(k[i]) : k[i]);
    }
  }
  return band;
}

std::vector<Complex> sample_grid(const TrigPoly& p, std::span<const std::size_t> grid) {
  if (grid.size() != p.dim()) throw ArgumentError("grid needs one size per torus axis");
  std::vector<std::int64_t> band = bandwidth(p);
  std::size_t total = 1;
  for (std::size_t a = 0; a < grid.size(); ++a) {
    if (grid[a] % 2 == 0) throw ArgumentError("grid sizes must be odd");
    if (static_cast<std::int64_t>(grid[a]) <= 2 * band[a]) {
      throw AliasingError("grid size " + std::to_string(grid[a]) + " on axis " +
                          std::to_string(a) + " aliases frequency " + std::to_string(band[a]));
    }
    total *= grid[a];
  }

  std::vector<Complex> samples(total);
  std::vector<std::size_t> idx(grid.size(), 0);
  std::vector<double> theta(grid.size(), 0.0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < grid.size(); ++a) {
      theta[a] = 2.0 * std::numbers::pi * static_cast<double>(idx[a]) /
                 static_cast<double>(grid[a]);
    }
    samples[flat] = eval_at(p, theta);
    for (std::size_t a = grid.size(); a-- > 0;) {
      if (++idx[a] < grid[a]) break;
      idx[a] = 0;
    }
  }
  return samples;
}

CoeffFunction fft_oracle(const TrigPoly& p, std::span<const std::size_t> grid) {
  std::vector<Complex> samples = sample_grid(p, grid);
  if (p.dim() == 0) return CoeffFunction::constant(0, samples.front());

  const std::size_t total = samples.size();
  FftwBuffer in(fftw_alloc_complex(total));
  FftwBuffer out(fftw_alloc_complex(total));
  std::vector<int> dims(grid.begin(), grid.end());
  FftwPlan plan(fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in.get(), out.get(),
                              FFTW_FORWARD, FFTW_ESTIMATE));
  for (std::size_t i = 0; i < total; ++i) {
    in[i][0] = samples[i].real();
    in[i][1] = samples[i].imag();
  }
  fftw_execute(plan.get());

  CoeffFunction result(p.dim());
  HoopVector k(p.dim());
  std::vector<std::size_t> bin(grid.size(), 0);
  const double norm = 1.0 / static_cast<double>(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t a = 0; a < grid.size(); ++a) {
      auto b = static_cast<std::int64_t>(bin[a]);
      auto n = static_cast<std::int64_t>(grid[a]);
      k[a] = b <= n / 2 ? b : b - n;
    }
    result.add_term(k, Complex(out[flat][0], out[flat][1]) * norm);
    for (std::size_t a = grid.size(); a-- > 0;) {
      if (++bin[a] < grid[a]) break;
      bin[a] = 0;
    }
  }
  return result;
}

CoeffFunction fft_oracle(const TrigPoly& p, std::size_t grid_per_axis) {
  std::vector<std::size_t> grid(p.dim(), grid_per_axis);
  return fft_oracle(p, grid);
}

}  // namespace looptx
