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

#include "tswr/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tswr {
namespace {

bool positive_finite(double x) { return x > 0.0 && std::isfinite(x); }

// log_base(1 + x) via log1p, which keeps accuracy for the small SNRs that
// show up at the bottom of the power sweep.
double log1p_base(double x, double log_base) {
  return std::log1p(x) / std::log(log_base);
}

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

void ChannelState::validate() const {
  if (!positive_finite(h1_cnr) || !positive_finite(h2_cnr)) {
    throw std::invalid_argument("ChannelState: CNRs must be positive and finite");
  }
}

void SystemConfig::validate() const {
  if (!positive_finite(p_tot)) {
    throw std::invalid_argument("SystemConfig: p_tot must be positive");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("SystemConfig: eta must lie in (0, 1]");
  }
  if (!positive_finite(block_time)) {
    throw std::invalid_argument("SystemConfig: block_time must be positive");
  }
  if (!(log_base > 1.0) || !std::isfinite(log_base)) {
    throw std::invalid_argument("SystemConfig: log_base must exceed 1");
  }
  if (!positive_finite(epsilon)) {
    throw std::invalid_argument("SystemConfig: epsilon must be positive");
  }
}

void PolicyPoint::validate() const {
  if (!(theta > 0.0 && theta < 1.0)) {
    throw std::invalid_argument("PolicyPoint: theta must lie in (0, 1)");
  }
  if (!(omega > 0.0 && omega < 1.0)) {
    throw std::invalid_argument("PolicyPoint: omega must lie in (0, 1)");
  }
}

SourcePowers induced_powers(const PolicyPoint& policy, const SystemConfig& cfg) {
  // Computing the larger share first makes the complement subtraction exact
  // (Sterbenz), so p1 + p2 == p_tot holds bit-for-bit.
  if (policy.omega >= 0.5) {
    const double p1 = cfg.p_tot * policy.omega;
    return {p1, cfg.p_tot - p1};
  }
  const double p2 = cfg.p_tot * (1.0 - policy.omega);
  return {cfg.p_tot - p2, p2};
}

double half_capacity(double snr, double log_base) {
  if (snr < 0.0) {
    throw std::domain_error("half_capacity: SNR must be nonnegative");
  }
  return 0.5 * log1p_base(snr, log_base);
}

double harvested_energy(double theta, double p1, double p2,
                        const ChannelState& ch, const SystemConfig& cfg) {
  check_unit_interval(theta, "harvested_energy: theta");
  return (p1 * ch.h1_cnr + p2 * ch.h2_cnr) * cfg.eta * theta * cfg.block_time;
}

double relay_power(double theta, double p1, double p2, const ChannelState& ch,
                   const SystemConfig& cfg) {
  check_unit_interval(theta, "relay_power: theta");
  if (theta == 1.0) {
    throw std::domain_error("relay_power: theta == 1 leaves no forwarding time");
  }
  return cfg.eta * (p1 * ch.h1_cnr + p2 * ch.h2_cnr) * 2.0 * theta / (1.0 - theta);
}

RateRegionBounds rate_region_bounds(const PolicyPoint& policy,
                                    const SystemConfig& cfg,
                                    const ChannelState& ch) {
  check_unit_interval(policy.theta, "rate_region_bounds: theta");
  check_unit_interval(policy.omega, "rate_region_bounds: omega");
  if (policy.theta >= 1.0) {
    return {0.0, 0.0, 0.0};  // no transmission time left
  }
  const auto [p1, p2] = induced_powers(policy, cfg);
  const double a1 = ch.h1_cnr * p1;
  const double a2 = ch.h2_cnr * p2;
  const double prefactor = (1.0 - policy.theta) * cfg.block_time / 2.0;
  // Relay SNR seen on each broadcast link; min{} keeps the caps finite even
  // when theta is close enough to 1 for this to overflow.
  const double relay_snr = 2.0 * cfg.eta * policy.theta * (a1 + a2) /
                           (1.0 - policy.theta);
  const double inv_ln_base = 1.0 / std::log(cfg.log_base);
  const double r1 = prefactor * inv_ln_base *
                    std::min(std::log1p(a1), std::log1p(ch.h2_cnr * relay_snr));
  const double r2 = prefactor * inv_ln_base *
                    std::min(std::log1p(a2), std::log1p(ch.h1_cnr * relay_snr));
  const double sum = prefactor * inv_ln_base * std::log1p(a1 + a2);
  return {r1, r2, sum};
}

double fair_sum_rate(const PolicyPoint& policy, const SystemConfig& cfg,
                     const ChannelState& ch) {
  const RateRegionBounds caps = rate_region_bounds(policy, cfg, ch);
  return 2.0 * std::min({caps.r1_cap, caps.r2_cap, caps.sum_cap / 2.0});
}

RatePair fair_rate_pair(const PolicyPoint& policy, const SystemConfig& cfg,
                        const ChannelState& ch) {
  const double r = fair_sum_rate(policy, cfg, ch) / 2.0;
  return {r, r};
}

}  // namespace tswr
