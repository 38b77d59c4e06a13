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

#ifndef TSWR_SOLVER_HPP_
#define TSWR_SOLVER_HPP_

#include <vector>

#include "tswr/model.hpp"

// Closed-form machinery for maximizing the fair sum rate over (theta, omega):
// the per-coordinate optimizers and the alternating scheme built on them.
//
// For a fixed omega the fair rate bottleneck reduces to two curves of theta,
//   source-limited:  F1(theta) = (1-theta)*T/2 * log(1 + Q)
//   relay-limited:   F2(theta) = (1-theta)*T/2 * log(1 + 2*G*theta/(1-theta))
// with Q = min{H1*P1, H2*P2} and G = min{H1,H2} * eta * (H1*P1 + H2*P2).
// F1 falls linearly, F2 rises then falls; the max of min{F1,F2} sits either
// at their unique crossing or at F2's peak, whichever comes first.

namespace tswr {

/// Per-omega constants of the bottleneck curves. s_sum carries the argument
/// of the multi-access sum constraint, H1*P1 + H2*P2.
struct BottleneckInputs {
  double q_cap;   // Q: weaker of the two source-to-relay SNRs
  double g_gain;  // G: relay-limited gain factor
  double s_sum;   // S: multi-access sum SNR
};

BottleneckInputs bottleneck_inputs(double omega, const SystemConfig& cfg,
                                   const ChannelState& ch);

enum class Method { alternating, grid, exact_theta };

/// Stable tag: "alternating", "grid" or "exact-theta".
const char* method_name(Method method);

struct OptimizationResult {
  PolicyPoint policy;
  double r_sum = 0.0;
  long iterations = 0;
  bool converged = false;
  Method method = Method::alternating;
};

/// F1: rate cap imposed by the weaker source-to-relay link, linear in theta.
double source_limited_rate(double theta, double q_cap,
                           const SystemConfig& cfg);

/// F2: rate cap imposed by the harvested relay power, unimodal in theta.
double relay_limited_rate(double theta, double g_gain,
                          const SystemConfig& cfg);

/// Best power split for a fixed theta. Closed form with three branches:
/// below the threshold theta < 1/(4*min{H1,H2}*eta + 1) the relay cap is
/// active and omega sits where it meets the weaker source constraint;
/// otherwise omega = H2/(H1+H2) balances the two source constraints.
double optimal_omega_given_theta(double theta, const SystemConfig& cfg,
                                 const ChannelState& ch);

/// Unique crossing of F1 and F2: theta1 = Q / (Q + 2G). Returns 0 when
/// q_cap == 0 (degenerate policy with one source silent).
double theta_intersection(const BottleneckInputs& inputs);

/// Maximizer theta2 of F2, via the principal-branch Lambert W:
///   m = 2G / (W0[(2G-1)/e] + 1),  theta2 = (m - 1) / (2G - 1),
/// with the removable singularity at 2G == 1 evaluated as 1 - 1/e.
double theta_peak(double g_gain);

struct ThetaRate {
  double theta_star;
  double r_sum;
};

/// Best harvest fraction for a fixed omega: theta* is theta1 if the curves
/// cross before F2 peaks, else theta2. The returned rate applies the
/// multi-access sum cap at theta*, so it is always achievable.
ThetaRate sum_rate_given_omega(double omega, const SystemConfig& cfg,
                               const ChannelState& ch);

/// Like sum_rate_given_omega, but folds the sum cap into the crossing by
/// replacing Q with min{Q, sqrt(1+S)-1}. The result is the exact maximum of
/// fair_sum_rate over theta at this omega.
ThetaRate sum_rate_given_omega_exact(double omega, const SystemConfig& cfg,
                                     const ChannelState& ch);

/// Alternating optimization from theta = 1/2: repeat omega-step then
/// theta-step until the rate changes by at most cfg.epsilon (at most 1000
/// rounds; non-convergence is reported, not thrown). The final rate is
/// re-evaluated through fair_sum_rate at the returned policy. When
/// rate_trace is non-null it receives the per-round rate sequence.
OptimizationResult alternating_optimize(const SystemConfig& cfg,
                                        const ChannelState& ch,
                                        std::vector<double>* rate_trace = nullptr);

/// Alternating optimization with the theta-step of sum_rate_given_omega_exact.
OptimizationResult alternating_optimize_exact(
    const SystemConfig& cfg, const ChannelState& ch,
    std::vector<double>* rate_trace = nullptr);

}  // namespace tswr

#endif  // TSWR_SOLVER_HPP_
