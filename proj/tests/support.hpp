#pragma once

// Fixtures and brute-force oracles shared by the unit tests. Nothing here is
// used by the library; the oracles are deliberately naive.

#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "looptx/graph.hpp"
#include "looptx/lattice.hpp"
#include "looptx/torus.hpp"

namespace looptx::test {

inline Graph theta_graph() {
  return Graph({"v0", "v1"}, {{"e1", "v0", "v1"}, {"e2", "v0", "v1"}, {"e3", "v0", "v1"}}, "v0");
}

inline Graph figure_eight() {
  return Graph({"v0"}, {{"a", "v0", "v0"}, {"b", "v0", "v0"}}, "v0");
}

inline Graph single_loop() { return Graph({"v0"}, {{"e", "v0", "v0"}}, "v0"); }

inline std::vector<Step> steps(const Graph& g, const std::vector<std::string>& tokens) {
  std::vector<Step> out;
  for (const std::string& t : tokens) out.push_back(parse_step(g, t));
  return out;
}

inline Word loop(const Graph& g, const std::vector<std::string>& tokens) {
  return make_loop(g, steps(g, tokens));
}

/// Scan left to right for the first cancelling pair, remove it, restart.
inline std::vector<Step> brute_force_reduce(std::vector<Step> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i + 1] == s[i].inverse()) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return s;
}

/// Same as above but always cancels the rightmost pair first.
inline std::vector<Step> brute_force_reduce_right(std::vector<Step> s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = s.size(); i-- > 1;) {
      if (s[i] == s[i - 1].inverse()) {
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) - 1, s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        changed = true;
        break;
      }
    }
  }
  return s;
}

/// Direct O(N^2) DFT over an odd grid, dim 1 or 2.
inline std::complex<double> naive_coefficient(const TrigPoly& p, const std::vector<std::size_t>& grid,
                                              const HoopVector& k) {
  std::complex<double> total{};
  std::size_t count = 1;
  for (std::size_t n : grid) count *= n;
  std::vector<double> theta(grid.size());
  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    double phase = 0.0;
    for (std::size_t a = grid.size(); a-- > 0;) {
      theta[a] = 2.0 * std::numbers::pi * static_cast<double>(rest % grid[a]) /
                 static_cast<double>(grid[a]);
      rest /= grid[a];
      phase += static_cast<double>(k[a]) * theta[a];
    }
    total += eval_at(p, theta) * std::polar(1.0, -phase);
  }
  return total / static_cast<double>(count);
}

/// Exhaustive search for integer coefficients x in [-bound, bound]^cols with
/// A x = target.
inline bool brute_force_member(const IntMatrix& a, const HoopVector& target, std::int64_t bound) {
  std::vector<std::int64_t> x(a.cols(), -bound);
  if (a.cols() == 0) {
    for (std::int64_t t : target) {
      if (t != 0) return false;
    }
    return true;
  }
  while (true) {
    if (a * x == target) return true;
    std::size_t i = 0;
    while (i < x.size() && x[i] == bound) x[i++] = -bound;
    if (i == x.size()) return false;
    ++x[i];
  }
}

}  // namespace looptx::test
