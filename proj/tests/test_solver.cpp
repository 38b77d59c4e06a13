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
#include <vector>

#include <doctest.h>

#include "tswr/oracle.hpp"
#include "test_util.hpp"

using namespace tswr;
using tswr::testing::Rng;
using tswr::testing::rel_diff;

namespace {

// The three per-omega constraints of the fixed-theta problem, written out
// from scratch (linear SNR units).
double bottleneck_of_omega(double omega, double theta, const SystemConfig& cfg,
                           const ChannelState& ch) {
  const double f1 = ch.h1_cnr * cfg.p_tot * omega;
  const double f2 = ch.h2_cnr * cfg.p_tot * (1.0 - omega);
  const double relay = std::min(ch.h1_cnr, ch.h2_cnr) * 2.0 * cfg.eta * theta /
                       (1.0 - theta) * cfg.p_tot *
                       (ch.h2_cnr + omega * (ch.h1_cnr - ch.h2_cnr));
  return std::min({f1, f2, relay});
}

double min_f1_f2(double theta, const BottleneckInputs& in,
                 const SystemConfig& cfg) {
  return std::min(source_limited_rate(theta, in.q_cap, cfg),
                  relay_limited_rate(theta, in.g_gain, cfg));
}

}  // namespace

TEST_CASE("omega closed form on the three worked branches") {
  SystemConfig cfg;
  // Above the threshold 1/5 the source constraints balance.
  CHECK(optimal_omega_given_theta(0.5, cfg, {1.0, 2.0}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  // Below it the relay constraint meets the weaker source.
  CHECK(optimal_omega_given_theta(0.1, cfg, {1.0, 2.0}) ==
        doctest::Approx(0.4 / 1.1).epsilon(1e-15));
  CHECK(optimal_omega_given_theta(0.1, cfg, {2.0, 1.0}) ==
        doctest::Approx(0.7 / 1.1).epsilon(1e-15));
  CHECK_THROWS_AS(optimal_omega_given_theta(0.0, cfg, {1.0, 2.0}),
                  std::domain_error);
}

TEST_CASE("omega closed form attains the dense-grid bottleneck maximum") {
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const SystemConfig cfg = rng.config();
    const ChannelState ch = rng.channel();
    const double theta = rng.uniform(0.001, 0.999);
    const double omega_star = optimal_omega_given_theta(theta, cfg, ch);
    const double achieved = bottleneck_of_omega(omega_star, theta, cfg, ch);
    double grid_best = 0.0;
    const int n = 100000;
    for (int j = 0; j <= n; ++j) {
      const double omega = 1e-6 + (1.0 - 2e-6) * j / n;
      grid_best = std::max(grid_best, bottleneck_of_omega(omega, theta, cfg, ch));
    }
    CHECK(achieved >= grid_best - 1e-6);
  }
}

TEST_CASE("theta crossing on worked points, certified by bisection") {
  SystemConfig cfg;
  CHECK(theta_intersection({0.0, 1.0, 1.0}) == 0.0);
  CHECK(theta_intersection({1.0, 1.0, 2.0}) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(theta_intersection({2.0, 1.0, 2.0}) ==
        doctest::Approx(0.5).epsilon(1e-15));

  for (const auto& in : {BottleneckInputs{1.0, 1.0, 2.0},
                         BottleneckInputs{2.0, 1.0, 2.0}}) {
    auto f1 = [&](double t) { return source_limited_rate(t, in.q_cap, cfg); };
    auto f2 = [&](double t) { return relay_limited_rate(t, in.g_gain, cfg); };
    const auto crossing = bisect_intersection(f1, f2, 1e-12, 1.0 - 1e-9);
    REQUIRE(crossing.has_value());
    CHECK(theta_intersection(in) == doctest::Approx(*crossing).epsilon(1e-10));
  }
}

TEST_CASE("curves coincide at the crossing for random inputs") {
  Rng rng(32);
  SystemConfig cfg;
  for (int i = 0; i < 300; ++i) {
    const double q = rng.log_uniform(-3, 2);
    const double g = rng.log_uniform(-3, 2);
    const BottleneckInputs in{q, g, q + g};
    const double theta1 = theta_intersection(in);
    CHECK(rel_diff(source_limited_rate(theta1, q, cfg),
                   relay_limited_rate(theta1, g, cfg)) <= 1e-10);
  }
}

TEST_CASE("theta peak on worked points, certified by golden section") {
  SystemConfig cfg;
  CHECK(theta_peak(0.5) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-15));
  CHECK_THROWS_AS(theta_peak(0.0), std::domain_error);

  for (const double g : {1.0, 10.0, 0.5, 0.07, 123.0}) {
    auto f2 = [&](double t) { return relay_limited_rate(t, g, cfg); };
    const ScalarPeak peak = golden_section_max(f2, 1e-9, 1.0 - 1e-9);
    CHECK(theta_peak(g) == doctest::Approx(peak.x_star).epsilon(1e-7));
    CHECK(std::abs(theta_peak(g) - peak.x_star) <= 1e-8);
  }
  CHECK(theta_peak(1.0) == doctest::Approx(0.56435).epsilon(2e-4));
  CHECK(theta_peak(10.0) == doctest::Approx(0.3644).epsilon(1e-3));
}

TEST_CASE("theta peak is a stationary maximum of the relay-limited curve") {
  Rng rng(33);
  SystemConfig cfg;
  for (int i = 0; i < 200; ++i) {
    const double g = rng.log_uniform(-2, 2);
    const double t2 = theta_peak(g);
    auto f2 = [&](double t) { return relay_limited_rate(t, g, cfg); };
    const double h = 1e-5;
    const double derivative = (f2(t2 + h) - f2(t2 - h)) / (2.0 * h);
    CHECK(std::abs(derivative) <= 1e-6);
    CHECK(f2(t2) >= f2(std::min(t2 + 0.01, 1.0 - 1e-9)));
    CHECK(f2(t2) >= f2(std::max(t2 - 0.01, 1e-9)));
  }
}

TEST_CASE("column solve picks the crossing-or-peak maximizer") {
  Rng rng(34);
  for (int i = 0; i < 200; ++i) {
    const SystemConfig cfg = rng.config();
    const ChannelState ch = rng.channel();
    const double omega = rng.uniform(0.01, 0.99);
    const BottleneckInputs in = bottleneck_inputs(omega, cfg, ch);
    const ThetaRate got = sum_rate_given_omega(omega, cfg, ch);

    const double theta1 = theta_intersection(in);
    const double theta2 = theta_peak(in.g_gain);
    CHECK((got.theta_star == theta1 || got.theta_star == theta2));

    const double at_star = min_f1_f2(got.theta_star, in, cfg);
    for (int j = 1; j < 500; ++j) {
      CHECK(at_star >= min_f1_f2(j / 500.0, in, cfg) - 1e-9);
    }
  }
}

TEST_CASE("column solve at the symmetric point, against the 1-D oracles") {
  SystemConfig cfg;
  cfg.p_tot = 2.0;
  const ChannelState ch{1.0, 1.0};
  const BottleneckInputs in = bottleneck_inputs(0.5, cfg, ch);
  CHECK(in.q_cap == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(in.g_gain == doctest::Approx(2.0).epsilon(1e-15));

  const ThetaRate got = sum_rate_given_omega(0.5, cfg, ch);
  CHECK(got.theta_star == doctest::Approx(0.2).epsilon(1e-15));

  // Maximizer of min{F1, F2} located independently.
  auto objective = [&](double t) { return min_f1_f2(t, in, cfg); };
  const ScalarPeak peak = golden_section_max(objective, 1e-9, 1.0 - 1e-9);
  CHECK(got.theta_star == doctest::Approx(peak.x_star).epsilon(1e-7));

  // Direct evaluation: bottleneck 0.8*log2(2) capped by 0.4*log2(3).
  CHECK(got.r_sum ==
        doctest::Approx(0.4 * std::log2(3.0)).epsilon(1e-13));
  CHECK(got.r_sum ==
        doctest::Approx(fair_sum_rate({got.theta_star, 0.5}, cfg, ch))
            .epsilon(1e-13));
}

TEST_CASE("column solve vanishes as omega approaches zero") {
  SystemConfig cfg;
  const ChannelState ch{1.0, 1.0};
  const ThetaRate got = sum_rate_given_omega(1e-9, cfg, ch);
  CHECK(got.r_sum <= 1e-6);
  CHECK(got.r_sum >= 0.0);
}

TEST_CASE("exact column solve: identical when the sum cap is slack") {
  SystemConfig cfg;
  cfg.p_tot = 0.5;
  const ChannelState ch{1.0, 1.0};
  // Q = 0.15 < sqrt(1.5) - 1, so the sum cap never binds in this column.
  const ThetaRate plain = sum_rate_given_omega(0.3, cfg, ch);
  const ThetaRate exact = sum_rate_given_omega_exact(0.3, cfg, ch);
  CHECK(plain.theta_star == exact.theta_star);
  CHECK(plain.r_sum == exact.r_sum);
}

TEST_CASE("exact column solve: strictly better when the sum cap binds") {
  SystemConfig cfg;
  cfg.p_tot = 2.0;
  const ChannelState ch{1.0, 1.0};  // H1*P1 == H2*P2 == 1 at omega = 1/2
  const ThetaRate plain = sum_rate_given_omega(0.5, cfg, ch);
  const ThetaRate exact = sum_rate_given_omega_exact(0.5, cfg, ch);
  CHECK(exact.r_sum > plain.r_sum + 1e-3);

  // The exact variant is the true column maximum of the fair rate.
  auto column = [&](double t) { return fair_sum_rate({t, 0.5}, cfg, ch); };
  const ScalarPeak peak = golden_section_max(column, 1e-9, 1.0 - 1e-9);
  CHECK(exact.r_sum == doctest::Approx(peak.f_star).epsilon(1e-10));
  CHECK(exact.theta_star == doctest::Approx(peak.x_star).epsilon(1e-6));
}

TEST_CASE("exact column solve matches the column maximum for random inputs") {
  Rng rng(35);
  for (int i = 0; i < 60; ++i) {
    const SystemConfig cfg = rng.config();
    const ChannelState ch = rng.channel();
    const double omega = rng.uniform(0.02, 0.98);
    const ThetaRate exact = sum_rate_given_omega_exact(omega, cfg, ch);
    auto column = [&](double t) { return fair_sum_rate({t, omega}, cfg, ch); };
    const ScalarPeak peak = golden_section_max(column, 1e-9, 1.0 - 1e-9);
    CHECK(exact.r_sum == doctest::Approx(peak.f_star).epsilon(1e-9));
    CHECK(exact.r_sum >= sum_rate_given_omega(omega, cfg, ch).r_sum - 1e-12);
  }
}

TEST_CASE("asymmetric column driven by the fixed-theta omega choice") {
  SystemConfig cfg;
  const ChannelState ch{1.0, 10.0};
  const double omega = optimal_omega_given_theta(0.5, cfg, ch);
  CHECK(omega == doctest::Approx(10.0 / 11.0).epsilon(1e-15));

  const BottleneckInputs in = bottleneck_inputs(omega, cfg, ch);
  const ThetaRate got = sum_rate_given_omega(omega, cfg, ch);
  auto objective = [&](double t) { return min_f1_f2(t, in, cfg); };
  const ScalarPeak peak = golden_section_max(objective, 1e-9, 1.0 - 1e-9);
  CHECK(got.theta_star == doctest::Approx(peak.x_star).epsilon(1e-6));
  CHECK(got.r_sum ==
        doctest::Approx(fair_sum_rate({got.theta_star, omega}, cfg, ch))
            .epsilon(1e-12));

  // Column maximum over theta at this omega, from the exact variant and an
  // independent 1-D search of the fair rate.
  const ThetaRate exact = sum_rate_given_omega_exact(omega, cfg, ch);
  auto column = [&](double t) { return fair_sum_rate({t, omega}, cfg, ch); };
  const ScalarPeak col_peak = golden_section_max(column, 1e-9, 1.0 - 1e-9);
  CHECK(exact.r_sum == doctest::Approx(col_peak.f_star).epsilon(1e-10));
}

TEST_CASE("alternating optimization on the symmetric instance") {
  SystemConfig cfg;
  cfg.p_tot = 2.0;
  const ChannelState ch{1.0, 1.0};
  std::vector<double> trace;
  const OptimizationResult result = alternating_optimize(cfg, ch, &trace);
  CHECK(result.converged);
  CHECK(result.policy.omega == 0.5);
  CHECK(result.policy.theta == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(result.iterations <= 5);
  CHECK(result.method == Method::alternating);
  CHECK(rel_diff(result.r_sum, fair_sum_rate(result.policy, cfg, ch)) <= 1e-12);
  CHECK(trace.size() == static_cast<size_t>(result.iterations));
}

TEST_CASE("alternating optimization against the 2-D grid oracle") {
  SystemConfig cfg;
  const ChannelState ch{1.0, 10.0};
  const GridReport oracle = grid_search_report(cfg, ch, {1001, 1001, 1e-6});
  const OptimizationResult alt = alternating_optimize(cfg, ch);
  CHECK(alt.converged);
  CHECK(alt.r_sum <= oracle.result.r_sum + oracle.discretization_bound);
  // The exact theta-step at the oracle's omega recovers the grid maximum.
  const ThetaRate exact =
      sum_rate_given_omega_exact(oracle.result.policy.omega, cfg, ch);
  CHECK(std::abs(exact.r_sum - oracle.result.r_sum) <= 1e-3);
}

TEST_CASE("alternating optimization at low power stays near the oracle") {
  SystemConfig cfg;
  cfg.p_tot = 0.1;  // -10 dBW
  const ChannelState ch{1.0, 1.0};
  const GridReport oracle = grid_search_report(cfg, ch, {2001, 2001, 1e-6});
  const OptimizationResult alt = alternating_optimize(cfg, ch);
  CHECK(alt.r_sum <= oracle.result.r_sum + oracle.discretization_bound);
  CHECK(std::abs(alt.r_sum - oracle.result.r_sum) <= 1e-3);
}

TEST_CASE("alternating iterates never decrease and converge quickly") {
  Rng rng(36);
  for (int i = 0; i < 100; ++i) {
    const SystemConfig cfg = rng.config();
    const ChannelState ch = rng.channel();
    std::vector<double> trace;
    const OptimizationResult result = alternating_optimize(cfg, ch, &trace);
    CHECK(result.converged);
    CHECK(result.iterations <= 100);
    for (size_t k = 1; k < trace.size(); ++k) {
      CHECK(trace[k] >= trace[k - 1] - 1e-12);
    }
    if (trace.size() >= 2) {
      CHECK(std::abs(trace.back() - trace[trace.size() - 2]) <= cfg.epsilon);
    }
    CHECK(rel_diff(result.r_sum, fair_sum_rate(result.policy, cfg, ch)) <=
          1e-12);
  }
}

TEST_CASE("relay-limited regime: the midpoint start is already a fixed point") {
  // Below the branch threshold the omega-step equalizes the relay cap
  // with the weaker source cap at the incoming theta, which makes theta1
  // reproduce that theta exactly: every such (theta, omega*(theta)) is a
  // coordinatewise optimum, so the alternation keeps its initialization.
  SystemConfig cfg;
  cfg.p_tot = 2.3897484;
  cfg.eta = 0.9531204;
  const ChannelState ch{0.194580538, 0.164102462};
  CHECK(1.0 / (4.0 * std::min(ch.h1_cnr, ch.h2_cnr) * cfg.eta + 1.0) > 0.5);

  const OptimizationResult alt = alternating_optimize(cfg, ch);
  CHECK(alt.converged);
  CHECK(alt.policy.theta == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(alt.iterations <= 2);

  // Both coordinate steps confirm the point as their own optimum.
  const double omega = optimal_omega_given_theta(0.5, cfg, ch);
  CHECK(omega == alt.policy.omega);
  CHECK(sum_rate_given_omega(omega, cfg, ch).theta_star ==
        doctest::Approx(0.5).epsilon(1e-12));

  // The joint optimum sits elsewhere on the ridge; the grid oracle and the
  // per-column exact solve expose the initialization-pinned gap.
  const GridReport oracle = grid_search_report(cfg, ch, {801, 801, 1e-6});
  CHECK(oracle.result.policy.theta > 0.55);
  CHECK(oracle.result.r_sum > alt.r_sum + 5e-3);
  const ThetaRate exact =
      sum_rate_given_omega_exact(oracle.result.policy.omega, cfg, ch);
  CHECK(std::abs(exact.r_sum - oracle.result.r_sum) <= 1e-3);
}

TEST_CASE("exact-theta alternation improves on the plain fixed point") {
  Rng rng(37);
  for (int i = 0; i < 50; ++i) {
    const SystemConfig cfg = rng.config();
    const ChannelState ch = rng.channel();
    const OptimizationResult plain = alternating_optimize(cfg, ch);
    const OptimizationResult exact = alternating_optimize_exact(cfg, ch);
    CHECK(exact.method == Method::exact_theta);
    CHECK(exact.converged);
    CHECK(exact.r_sum >= plain.r_sum - 1e-9);
  }
}

TEST_CASE("method tags are stable") {
  CHECK(std::string(method_name(Method::alternating)) == "alternating");
  CHECK(std::string(method_name(Method::grid)) == "grid");
  CHECK(std::string(method_name(Method::exact_theta)) == "exact-theta");
}
