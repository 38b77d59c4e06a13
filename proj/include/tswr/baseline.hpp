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

#ifndef TSWR_BASELINE_HPP_
#define TSWR_BASELINE_HPP_

#include "tswr/model.hpp"

namespace tswr {

/// Comparison of two schemes' rates with their normalized relative gain
/// (r_a - r_b) / r_b; positive means scheme A outperforms scheme B.
struct GainReport {
  double r_a;
  double r_b;
  double gain;
};

/// Maximum fair sum rate of the conventional two-way relay with its own
/// power supply, the budget split optimally across all three nodes:
///   log(1 + 2 * p_tot / V),  V = 1/H1 + 1/H2 + max{1/H1, 1/H2},
/// scaled by block_time, in cfg.log_base units. A black-box benchmark.
double non_eh_msr(const SystemConfig& cfg, const ChannelState& ch);

/// (r_a - r_b) / r_b. Throws std::domain_error when r_b is not positive.
double relative_gain(double r_a, double r_b);

GainReport make_gain_report(double r_a, double r_b);

}  // namespace tswr

#endif  // TSWR_BASELINE_HPP_
