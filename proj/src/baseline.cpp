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

#include "tswr/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tswr {

double non_eh_msr(const SystemConfig& cfg, const ChannelState& ch) {
  const double inv_h1 = 1.0 / ch.h1_cnr;
  const double inv_h2 = 1.0 / ch.h2_cnr;
  const double v = inv_h1 + inv_h2 + std::max(inv_h1, inv_h2);
  return cfg.block_time * std::log1p(2.0 * cfg.p_tot / v) /
         std::log(cfg.log_base);
}

double relative_gain(double r_a, double r_b) {
  if (!(r_b > 0.0)) {
    throw std::domain_error("relative_gain: reference rate must be positive");
  }
  return (r_a - r_b) / r_b;
}

GainReport make_gain_report(double r_a, double r_b) {
  return {r_a, r_b, relative_gain(r_a, r_b)};
}

}  // namespace tswr
