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

#include "tswr/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tswr/lambert.hpp"

namespace tswr {
namespace {

constexpr int kMaxRounds = 1000;

double clamp_open_unit(double x) {
  return std::clamp(x, 1e-15, 1.0 - 1e-15);
}

// sqrt(1 + s) - 1 without cancellation for small s.
double sqrt1p_minus_one(double s) {
  return s / (std::sqrt(1.0 + s) + 1.0);
}

void check_open_unit(double value, const char* what) {
  if (!(value > 0.0 && value < 1.0)) {
    throw std::domain_error(std::string(what) + " must lie in (0, 1)");
  }
}

// Shared body of the two column solvers. q_line is the constant of the
// decreasing line: Q for the plain variant, min{Q, sqrt(1+S)-1} for the
// exact one.
ThetaRate solve_column(double q_line, const BottleneckInputs& in,
                       const SystemConfig& cfg) {
  const double theta1 = theta_intersection({q_line, in.g_gain, in.s_sum});
  const double theta2 = theta_peak(in.g_gain);
  const double theta_star = theta1 <= theta2 ? theta1 : theta2;

  const double inv_ln_base = 1.0 / std::log(cfg.log_base);
  const double k = (1.0 - theta_star) * cfg.block_time / 2.0;
  double bottleneck;  // 2 * min{F1, F2} at theta*
  if (theta1 <= theta2) {
    bottleneck = 2.0 * k * std::log1p(q_line) * inv_ln_base;
  } else {
    const double relay_snr = 2.0 * in.g_gain * theta_star / (1.0 - theta_star);
    bottleneck = 2.0 * k * std::log1p(relay_snr) * inv_ln_base;
  }
  const double sum_cap = k * std::log1p(in.s_sum) * inv_ln_base;
  return {theta_star, std::min(bottleneck, sum_cap)};
}

OptimizationResult alternate(const SystemConfig& cfg, const ChannelState& ch,
                             bool exact_theta,
                             std::vector<double>* rate_trace) {
  cfg.validate();
  ch.validate();
  if (rate_trace) rate_trace->clear();

  double theta = 0.5;  // midpoint start keeps the average round count low
  double omega = 0.5;
  double r_prev = 0.0;
  long rounds = 0;
  bool converged = false;
  for (int k = 0; k < kMaxRounds; ++k) {
    omega = optimal_omega_given_theta(theta, cfg, ch);
    const ThetaRate step = exact_theta
                               ? sum_rate_given_omega_exact(omega, cfg, ch)
                               : sum_rate_given_omega(omega, cfg, ch);
    theta = clamp_open_unit(step.theta_star);
    rounds = k + 1;
    if (rate_trace) rate_trace->push_back(step.r_sum);
    if (std::abs(step.r_sum - r_prev) <= cfg.epsilon) {
      converged = true;
      break;
    }
    r_prev = step.r_sum;
  }

  OptimizationResult result;
  result.policy = {clamp_open_unit(theta), clamp_open_unit(omega)};
  // Report the rate the returned policy actually achieves.
  result.r_sum = fair_sum_rate(result.policy, cfg, ch);
  result.iterations = rounds;
  result.converged = converged;
  result.method = exact_theta ? Method::exact_theta : Method::alternating;
  return result;
}

}  // namespace

const char* method_name(Method method) {
  switch (method) {
    case Method::alternating: return "alternating";
    case Method::grid: return "grid";
    case Method::exact_theta: return "exact-theta";
  }
  return "unknown";
}

BottleneckInputs bottleneck_inputs(double omega, const SystemConfig& cfg,
                                   const ChannelState& ch) {
  const auto [p1, p2] = induced_powers({0.5, omega}, cfg);
  const double a1 = ch.h1_cnr * p1;
  const double a2 = ch.h2_cnr * p2;
  const double s = a1 + a2;
  return {std::min(a1, a2), std::min(ch.h1_cnr, ch.h2_cnr) * cfg.eta * s, s};
}

double source_limited_rate(double theta, double q_cap,
                           const SystemConfig& cfg) {
  if (theta >= 1.0) return 0.0;
  return (1.0 - theta) * cfg.block_time / 2.0 * std::log1p(q_cap) /
         std::log(cfg.log_base);
}

double relay_limited_rate(double theta, double g_gain,
                          const SystemConfig& cfg) {
  if (theta <= 0.0 || theta >= 1.0) return 0.0;
  const double relay_snr = 2.0 * g_gain * theta / (1.0 - theta);
  if (!std::isfinite(relay_snr)) return 0.0;  // theta within ulps of 1
  return (1.0 - theta) * cfg.block_time / 2.0 * std::log1p(relay_snr) /
         std::log(cfg.log_base);
}

double optimal_omega_given_theta(double theta, const SystemConfig& cfg,
                                 const ChannelState& ch) {
  check_open_unit(theta, "optimal_omega_given_theta: theta");
  const double h1 = ch.h1_cnr;
  const double h2 = ch.h2_cnr;
  const double hmin = std::min(h1, h2);
  const double threshold = 1.0 / (4.0 * hmin * cfg.eta + 1.0);

  double omega;
  if (theta < threshold) {
    // The relay cap is still below the source crossing; omega sits where it
    // meets the weaker source constraint.
    const double relay_weight = 2.0 * hmin * cfg.eta * theta;
    if (h2 > h1) {
      omega = relay_weight * h2 /
              (h1 * (1.0 - theta) + relay_weight * (h2 - h1));
    } else {
      omega = h2 * (1.0 - theta - relay_weight) /
              (h2 * (1.0 - theta) + relay_weight * (h1 - h2));
    }
  } else {
    omega = h2 / (h1 + h2);
  }
  return clamp_open_unit(omega);
}

double theta_intersection(const BottleneckInputs& inputs) {
  if (inputs.q_cap <= 0.0) return 0.0;
  if (!(inputs.g_gain > 0.0)) {
    throw std::domain_error("theta_intersection: g_gain must be positive");
  }
  // F1 = F2 reduces to Q = 2*G*theta/(1-theta).
  return inputs.q_cap / (inputs.q_cap + 2.0 * inputs.g_gain);
}

double theta_peak(double g_gain) {
  if (!(g_gain > 0.0)) {
    throw std::domain_error("theta_peak: g_gain must be positive");
  }
  const double delta = 2.0 * g_gain - 1.0;
  if (std::abs(delta) <= 1e-9) {
    return 1.0 - std::exp(-1.0);  // limit of the closed form at 2G == 1
  }
  const double w = lambert_w0(delta * std::exp(-1.0));
  const double m = 2.0 * g_gain / (w + 1.0);
  return clamp_open_unit((m - 1.0) / delta);
}

ThetaRate sum_rate_given_omega(double omega, const SystemConfig& cfg,
                               const ChannelState& ch) {
  check_open_unit(omega, "sum_rate_given_omega: omega");
  const BottleneckInputs in = bottleneck_inputs(omega, cfg, ch);
  return solve_column(in.q_cap, in, cfg);
}

ThetaRate sum_rate_given_omega_exact(double omega, const SystemConfig& cfg,
                                     const ChannelState& ch) {
  check_open_unit(omega, "sum_rate_given_omega_exact: omega");
  const BottleneckInputs in = bottleneck_inputs(omega, cfg, ch);
  // The sum cap, rewritten per direction, is one more decreasing line with
  // constant sqrt(1+S)-1; folding it into Q makes the crossing exact.
  const double q_eff = std::min(in.q_cap, sqrt1p_minus_one(in.s_sum));
  return solve_column(q_eff, in, cfg);
}

OptimizationResult alternating_optimize(const SystemConfig& cfg,
                                        const ChannelState& ch,
                                        std::vector<double>* rate_trace) {
  return alternate(cfg, ch, /*exact_theta=*/false, rate_trace);
}

OptimizationResult alternating_optimize_exact(const SystemConfig& cfg,
                                              const ChannelState& ch,
                                              std::vector<double>* rate_trace) {
  return alternate(cfg, ch, /*exact_theta=*/true, rate_trace);
}

}  // namespace tswr
