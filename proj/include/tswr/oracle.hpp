// Copyright 2026 The tswr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSWR_ORACLE_HPP_
#define TSWR_ORACLE_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>

#include "tswr/model.hpp"
#include "tswr/solver.hpp"

// Brute-force references used to certify the closed forms: an exhaustive
// lattice search over (theta, omega) plus generic 1-D bisection and
// golden-section helpers. Deliberately independent of the solver's algebra.

namespace tswr {

/// Lattice over [margin, 1-margin]^2. The margins keep the search away from
/// the theta == 1 singularity and the degenerate omega endpoints.
struct GridSpec {
  int n_theta = 2001;
  int n_omega = 2001;
  double margin = 1e-6;

  void validate() const;
};

/// Grid maximum plus a Lipschitz-style error estimate: half the largest
/// nearest-neighbor rate change per axis, summed. The true maximum exceeds
/// the grid maximum by at most about this bound.
struct GridReport {
  OptimizationResult result;
  double discretization_bound;
};

GridReport grid_search_report(const SystemConfig& cfg, const ChannelState& ch,
                              const GridSpec& grid = {});

/// Exhaustive evaluation of fair_sum_rate on the full lattice, row-major in
/// theta then omega. Deterministic tie-break: smallest theta, then omega.
OptimizationResult grid_search(const SystemConfig& cfg, const ChannelState& ch,
                               const GridSpec& grid = {});

struct ScalarPeak {
  double x_star;
  double f_star;
};

/// Golden-section maximization of a unimodal f on [lo, hi], followed by one
/// guarded parabolic refinement so the location is trustworthy even where
/// f is flat at the level of rounding noise. Throws std::domain_error when
/// lo >= hi.
template <class F>
ScalarPeak golden_section_max(F&& f, double lo, double hi) {
  if (!(lo < hi)) {
    throw std::domain_error("golden_section_max: lo must be below hi");
  }
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-11; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }
  double x = (a + b) / 2;
  double fx = f(x);

  // Parabolic polish: a 3-point fit with h far above the noise floor pins
  // the vertex to ~1e-10 even when golden-section comparisons have gone
  // noise-limited near a flat peak.
  const double h = 1e-5 * std::max(1.0, std::abs(x));
  if (x - h > lo && x + h < hi) {
    const double fl = f(x - h), fr = f(x + h);
    const double denom = fl - 2 * fx + fr;
    if (denom < 0.0) {
      const double shift = 0.5 * h * (fl - fr) / denom;
      if (std::abs(shift) <= 2 * h) {
        const double xv = x + shift;
        const double fv = f(xv);
        if (fv >= fx) {
          x = xv;
          fx = fv;
        }
      }
    }
  }
  return {x, fx};
}

/// Locates the sign change of f - g on [lo, hi] by bisection, assuming
/// f(lo) > g(lo). Returns std::nullopt when f - g does not change sign on
/// the interval (no crossing there).
template <class F, class G>
std::optional<double> bisect_intersection(F&& f, G&& g, double lo, double hi) {
  auto diff = [&](double x) { return f(x) - g(x); };
  double dlo = diff(lo);
  double dhi = diff(hi);
  if (!(dlo > 0.0)) {
    throw std::domain_error("bisect_intersection: f must start above g");
  }
  if (dhi > 0.0) {
    return std::nullopt;
  }
  double a = lo, b = hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // interval exhausted in doubles
    const double dm = diff(mid);
    if (dm > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
    if (std::abs(dm) <= 1e-13 && (b - a) < 1e-12) break;
  }
  return 0.5 * (a + b);
}

}  // namespace tswr

#endif  // TSWR_ORACLE_HPP_
