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

#include "tswr/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tswr {

void GridSpec::validate() const {
  if (n_theta < 3 || n_omega < 3) {
    throw std::invalid_argument("GridSpec: need at least 3 points per axis");
  }
  if (!(margin > 0.0 && margin < 0.5)) {
    throw std::invalid_argument("GridSpec: margin must lie in (0, 0.5)");
  }
}

GridReport grid_search_report(const SystemConfig& cfg, const ChannelState& ch,
                              const GridSpec& grid) {
  grid.validate();
  cfg.validate();
  ch.validate();

  const double lo = grid.margin;
  const double span = 1.0 - 2.0 * grid.margin;
  const double theta_step = span / (grid.n_theta - 1);
  const double omega_step = span / (grid.n_omega - 1);

  double best = -1.0;
  double best_theta = lo;
  double best_omega = lo;
  double max_dtheta = 0.0;  // largest neighbor-to-neighbor change per axis
  double max_domega = 0.0;
  std::vector<double> prev_row(static_cast<size_t>(grid.n_omega), 0.0);

  for (int i = 0; i < grid.n_theta; ++i) {
    const double theta = lo + i * theta_step;
    double left = 0.0;
    for (int j = 0; j < grid.n_omega; ++j) {
      const double omega = lo + j * omega_step;
      const double value = fair_sum_rate({theta, omega}, cfg, ch);
      if (value > best) {  // strict: ties keep the smallest theta, then omega
        best = value;
        best_theta = theta;
        best_omega = omega;
      }
      if (j > 0) max_domega = std::max(max_domega, std::abs(value - left));
      if (i > 0) {
        max_dtheta = std::max(max_dtheta,
                              std::abs(value - prev_row[static_cast<size_t>(j)]));
      }
      left = value;
      prev_row[static_cast<size_t>(j)] = value;
    }
  }

  GridReport report;
  report.result.policy = {best_theta, best_omega};
  report.result.r_sum = best;
  report.result.iterations =
      static_cast<long>(grid.n_theta) * static_cast<long>(grid.n_omega);
  report.result.converged = true;
  report.result.method = Method::grid;
  report.discretization_bound = 0.5 * (max_dtheta + max_domega);
  return report;
}

OptimizationResult grid_search(const SystemConfig& cfg, const ChannelState& ch,
                               const GridSpec& grid) {
  return grid_search_report(cfg, ch, grid).result;
}

}  // namespace tswr
