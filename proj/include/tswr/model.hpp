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

#ifndef TSWR_MODEL_HPP_
#define TSWR_MODEL_HPP_

// Physical model of a time-switching wireless-powered two-way relay link:
// two sources exchange data through a relay that first harvests energy from
// their transmissions for a fraction theta of the block and then forwards a
// network-coded message, with the source power budget split by omega.
//
// Everything in this header is a pure function of its inputs and safe to
// call concurrently.

namespace tswr {

/// Linear channel-to-noise ratios |h_i|^2 of the two source-relay links
/// (noise variance normalized to one).
struct ChannelState {
  double h1_cnr = 1.0;
  double h2_cnr = 1.0;

  /// Channel gain ratio h2_cnr / h1_cnr.
  double beta() const { return h2_cnr / h1_cnr; }

  /// Throws std::invalid_argument unless both CNRs are positive and finite.
  void validate() const;
};

/// System-wide parameters shared by every rate computation.
struct SystemConfig {
  double p_tot = 1.0;       // total source power budget [W]
  double eta = 1.0;         // energy conversion efficiency, in (0,1]
  double block_time = 1.0;  // duration T of one relaying round [s]
  double log_base = 2.0;    // 2 gives rates in bits, e in nats
  double epsilon = 1e-9;    // bias error terminating the alternating solver

  void validate() const;
};

/// One operating point: theta is the harvest-time fraction, omega the share
/// of the power budget given to source 1. Both live in the open unit
/// interval; rate evaluations at the closed boundary return limit values
/// (all caps vanish) instead of failing, so optimizers can probe the edges.
struct PolicyPoint {
  double theta = 0.5;
  double omega = 0.5;

  void validate() const;
};

/// Source transmit powers induced by a policy. p2 is computed as the exact
/// complement p_tot - p1 so the two always sum back to the budget.
struct SourcePowers {
  double p1;
  double p2;
};

SourcePowers induced_powers(const PolicyPoint& policy, const SystemConfig& cfg);

/// The three caps of the achievable rate region at one policy: per-direction
/// bounds r1_cap, r2_cap (each the tighter of the multi-access and broadcast
/// constraints) and the joint multi-access bound sum_cap on r1 + r2.
struct RateRegionBounds {
  double r1_cap;
  double r2_cap;
  double sum_cap;
};

/// Per-direction rates; under the fairness constraint r1 == r2.
struct RatePair {
  double r1;
  double r2;
};

/// C(x) = (1/2) log(1 + x). Throws std::domain_error for negative SNR.
double half_capacity(double snr, double log_base = 2.0);

/// Energy collected by the relay over the harvest window:
/// (p1*H1 + p2*H2) * eta * theta * T.
double harvested_energy(double theta, double p1, double p2,
                        const ChannelState& ch, const SystemConfig& cfg);

/// Average relay transmit power when all harvested energy is spent in the
/// forwarding half-slot: eta * (p1*H1 + p2*H2) * 2*theta / (1 - theta).
/// Throws std::domain_error at theta == 1.
double relay_power(double theta, double p1, double p2, const ChannelState& ch,
                   const SystemConfig& cfg);

RateRegionBounds rate_region_bounds(const PolicyPoint& policy,
                                    const SystemConfig& cfg,
                                    const ChannelState& ch);

/// Largest r1 + r2 achievable at this policy subject to r1 == r2:
/// 2 * min{r1_cap, r2_cap, sum_cap / 2}.
double fair_sum_rate(const PolicyPoint& policy, const SystemConfig& cfg,
                     const ChannelState& ch);

/// The equal per-direction rates attaining fair_sum_rate.
RatePair fair_rate_pair(const PolicyPoint& policy, const SystemConfig& cfg,
                        const ChannelState& ch);

}  // namespace tswr

#endif  // TSWR_MODEL_HPP_
