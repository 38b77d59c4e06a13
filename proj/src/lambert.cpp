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

#include "tswr/lambert.hpp"

#include <cmath>
#include <stdexcept>

namespace tswr {
namespace {

// Branch-point expansion in p = sqrt(2*(1 + e*x)):
// W0(x) = -1 + p - p^2/3 + 11 p^3/72 - 43 p^4/540 + 769 p^5/17280 - ...
double near_branch_series(double p) {
  return -1.0 +
         p * (1.0 +
              p * (-1.0 / 3.0 +
                   p * (11.0 / 72.0 +
                        p * (-43.0 / 540.0 + p * (769.0 / 17280.0)))));
}

double initial_guess(double x) {
  if (x < -0.25) {
    const double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    return near_branch_series(p);
  }
  // Winitzki's approximation, a few-percent seed on all of [-0.25, inf).
  const double l = std::log1p(x);
  return l * (1.0 - std::log1p(l) / (2.0 + l));
}

}  // namespace

double lambert_w0(double x) {
  const double branch_x = -std::exp(-1.0);
  if (x < branch_x) {
    // Tolerate arguments a hair below -1/e produced by rounding in callers.
    if (x > branch_x - 1e-14) return -1.0;
    throw std::domain_error("lambert_w0: argument below -1/e has no real value");
  }
  if (x == 0.0) return 0.0;

  // So close to the branch point that Halley's denominator degenerates; the
  // series is already past double precision there.
  const double p2 = 2.0 * (1.0 + std::exp(1.0) * x);
  if (p2 < 1e-8) {
    return near_branch_series(std::sqrt(std::max(p2, 0.0)));
  }

  double w = initial_guess(x);
  double previous = w;
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    // The residual noise floor; far below the certified 1e-12 tolerance.
    if (std::abs(f) <= 8.0 * 2.220446049250313e-16 * std::max(1.0, std::abs(x))) {
      return w;
    }
    const double wp1 = w + 1.0;
    // Halley step for f(w) = w e^w - x.
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    const double next = w - step;
    if (next == w || next == previous) {
      return next;  // stalled or ulp-level limit cycle
    }
    previous = w;
    w = next;
  }
  throw std::runtime_error("lambert_w0: iteration failed to converge");
}

WEvaluation lambert_w0_eval(double x) {
  const double w = lambert_w0(x);
  return {x, w, std::abs(w * std::exp(w) - x)};
}

}  // namespace tswr
