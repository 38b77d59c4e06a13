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

#include "tswr/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tswr/baseline.hpp"
#include "tswr/model.hpp"
#include "tswr/oracle.hpp"
#include "tswr/solver.hpp"
#include "tswr/sweep.hpp"

namespace tswr {
namespace {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt2e(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.2e", v);
  return buf;
}

Method parse_method(const std::string& name) {
  if (name == "alt") return Method::alternating;
  if (name == "grid") return Method::grid;
  return Method::exact_theta;  // "exact"; choices enforced by CLI11
}

struct OptimizeOptions {
  double h1 = 1.0;
  double beta_db = 0.0;
  double ptot_dbw = 0.0;
  double eta = 1.0;
  double epsilon = 1e-9;
  std::string method = "alt";
  int grid_points = 2001;
};

int run_optimize(const OptimizeOptions& opt, std::ostream& out) {
  const ChannelState ch = cnr_from_beta(opt.h1, opt.beta_db);
  SystemConfig cfg;
  cfg.p_tot = linear_from_db(opt.ptot_dbw);
  cfg.eta = opt.eta;
  cfg.epsilon = opt.epsilon;

  OptimizationResult result;
  switch (parse_method(opt.method)) {
    case Method::alternating:
      result = alternating_optimize(cfg, ch);
      break;
    case Method::exact_theta:
      result = alternating_optimize_exact(cfg, ch);
      break;
    case Method::grid:
      result = grid_search(cfg, ch, {opt.grid_points, opt.grid_points, 1e-6});
      break;
  }
  const double benchmark = non_eh_msr(cfg, ch);
  out << "theta_star=" << fmt9(result.policy.theta) << "\n"
      << "omega_star=" << fmt9(result.policy.omega) << "\n"
      << "r_sum_ts=" << fmt9(result.r_sum) << "\n"
      << "r_sum_non_eh=" << fmt9(benchmark) << "\n"
      << "gain=" << fmt9(relative_gain(result.r_sum, benchmark)) << "\n"
      << "method=" << method_name(result.method) << "\n"
      << "iterations=" << result.iterations << "\n"
      << "converged=" << (result.converged ? 1 : 0) << "\n";
  return 0;
}

struct SweepOptions {
  SweepSpec spec;
  double epsilon = 1e-9;
  std::string method = "alt";
  int grid_points = 2001;
  std::string out_path;
  std::string svg_prefix;
};

int run_sweep_cmd(const SweepOptions& opt, std::ostream& out,
                  std::ostream& err) {
  const std::vector<SweepRow> rows =
      run_sweep(opt.spec, parse_method(opt.method), opt.epsilon,
                {opt.grid_points, opt.grid_points, 1e-6});
  emit_csv(rows, opt.out_path);
  out << "wrote " << opt.out_path << " (" << rows.size() << " rows)\n";

  if (!opt.svg_prefix.empty()) {
    const bool beta_axis = opt.spec.beta_steps >= 2;
    const bool ptot_axis = opt.spec.ptot_steps >= 2;
    auto write_chart = [&](ChartKind kind) {
      const std::string path =
          opt.svg_prefix + "-" + chart_name(kind) + ".svg";
      render_svg(rows, kind, path);
      out << "wrote " << path << "\n";
    };
    if (beta_axis && ptot_axis) {
      write_chart(ChartKind::surface_as_heatmap);
      write_chart(ChartKind::gain_surface);
    } else if (beta_axis) {
      write_chart(ChartKind::msr_vs_beta);
    } else if (ptot_axis) {
      write_chart(ChartKind::msr_vs_ptot);
    } else {
      err << "note: 1x1 sweep, no chart rendered\n";
    }
  }

  int flagged = 0;
  for (const SweepRow& row : rows) {
    if (!row.converged) {
      ++flagged;
      err << "warning: no convergence at beta_db=" << fmt9(row.beta_db)
          << " ptot_dbw=" << fmt9(row.ptot_dbw) << "\n";
    }
  }
  return flagged == 0 ? 0 : 1;
}

struct VerifyOptions {
  int instances = 100;
  unsigned long long seed = 42;
  int grid_points = 2001;
};

struct RandomInstance {
  SystemConfig cfg;
  ChannelState ch;
};

// H1, H2, P_tot log-uniform on [0.1, 10]; eta uniform on [0.3, 1].
RandomInstance draw_instance(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomInstance inst;
  inst.ch.h1_cnr = std::pow(10.0, -1.0 + 2.0 * unit(rng));
  inst.ch.h2_cnr = std::pow(10.0, -1.0 + 2.0 * unit(rng));
  inst.cfg.p_tot = std::pow(10.0, -1.0 + 2.0 * unit(rng));
  inst.cfg.eta = 0.3 + 0.7 * unit(rng);
  return inst;
}

// Bottleneck of the three per-omega constraints, the objective the
// omega-step closed form claims to maximize (linear SNR units).
double omega_bottleneck(double omega, double theta, const SystemConfig& cfg,
                        const ChannelState& ch) {
  const double h1 = ch.h1_cnr, h2 = ch.h2_cnr;
  const double f1 = h1 * cfg.p_tot * omega;
  const double f2 = h2 * cfg.p_tot * (1.0 - omega);
  const double relay_factor = std::min(h1, h2) * 2.0 * cfg.eta * theta /
                              (1.0 - theta);
  const double fr = relay_factor * cfg.p_tot * (h2 + omega * (h1 - h2));
  return std::min({f1, f2, fr});
}

// Rate lost to the multi-access sum cap at this policy: the cap-free
// bottleneck value minus the capped fair rate.
double cap_excess(const PolicyPoint& policy, const SystemConfig& cfg,
                  const ChannelState& ch) {
  const BottleneckInputs in = bottleneck_inputs(policy.omega, cfg, ch);
  const double uncapped =
      2.0 * std::min(source_limited_rate(policy.theta, in.q_cap, cfg),
                     relay_limited_rate(policy.theta, in.g_gain, cfg));
  return std::max(0.0, uncapped - fair_sum_rate(policy, cfg, ch));
}

class ClaimPrinter {
 public:
  explicit ClaimPrinter(std::ostream& out) : out_(out) {}

  void claim(bool pass, const std::string& text) {
    all_passed_ = all_passed_ && pass;
    out_ << (pass ? "[PASS] " : "[FAIL] ") << text << "\n";
  }
  void info(const std::string& text) { out_ << "[info] " << text << "\n"; }
  bool all_passed() const { return all_passed_; }

 private:
  std::ostream& out_;
  bool all_passed_ = true;
};

int run_verify(const VerifyOptions& opt, std::ostream& out) {
  out << "verify: instances=" << opt.instances << " seed=" << opt.seed
      << " grid=" << opt.grid_points << "\n";
  ClaimPrinter report(out);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Closed-form theta1/theta2 against the 1-D oracles.
  double max_d1 = 0.0, max_d2 = 0.0;
  for (int i = 0; i < opt.instances; ++i) {
    const RandomInstance inst = draw_instance(rng);
    const double omega = 0.05 + 0.9 * unit(rng);
    const BottleneckInputs in = bottleneck_inputs(omega, inst.cfg, inst.ch);
    auto f1 = [&](double t) { return source_limited_rate(t, in.q_cap, inst.cfg); };
    auto f2 = [&](double t) { return relay_limited_rate(t, in.g_gain, inst.cfg); };

    const ScalarPeak peak = golden_section_max(f2, 1e-9, 1.0 - 1e-9);
    max_d2 = std::max(max_d2, std::abs(theta_peak(in.g_gain) - peak.x_star));

    auto crossing = bisect_intersection(f1, f2, 1e-12, peak.x_star);
    if (!crossing) {
      crossing = bisect_intersection(f1, f2, peak.x_star, 1.0 - 1e-9);
    }
    max_d1 = std::max(max_d1, std::abs(theta_intersection(in) - *crossing));
  }
  report.claim(max_d1 <= 1e-9, "theta1 crossing matches bisection oracle      max |diff| = " +
                                   fmt2e(max_d1) + " (tol 1e-9)");
  report.claim(max_d2 <= 1e-8, "theta2 peak matches golden-section oracle     max |diff| = " +
                                   fmt2e(max_d2) + " (tol 1e-8)");

  // Closed-form omega* against a dense omega grid of the bottleneck.
  double max_shortfall = 0.0;
  for (int i = 0; i < opt.instances; ++i) {
    const RandomInstance inst = draw_instance(rng);
    const double theta = 0.001 + 0.998 * unit(rng);
    const double omega_star = optimal_omega_given_theta(theta, inst.cfg, inst.ch);
    const double achieved = omega_bottleneck(omega_star, theta, inst.cfg, inst.ch);
    double grid_best = 0.0;
    const int n = 100000;
    for (int j = 0; j <= n; ++j) {
      const double omega = 1e-6 + (1.0 - 2e-6) * j / n;
      grid_best = std::max(grid_best,
                           omega_bottleneck(omega, theta, inst.cfg, inst.ch));
    }
    max_shortfall = std::max(max_shortfall, grid_best - achieved);
  }
  report.claim(max_shortfall <= 1e-6,
               "omega* attains the bottleneck grid maximum   max shortfall = " +
                   fmt2e(max_shortfall) + " (tol 1e-6)");

  // Alternating solver against the 2-D grid oracle. Its two structural gap
  // sources are fixed-point artifacts: the sum cap binding at its solution
  // or at the optimum (the steps themselves are cap-free), and the
  // midpoint-pinned ridge where the omega-step makes theta1 reproduce the
  // incoming theta, freezing theta at the initialization. Instances where
  // both effects are value-immaterial must match the oracle tightly; on
  // every instance the exact column solve at the oracle's omega must
  // recover the grid maximum up to the theta discretization.
  const GridSpec grid{opt.grid_points, opt.grid_points, 1e-6};
  const double closure_tol =
      1e-3 * std::max(1.0, 2000.0 / (grid.n_theta - 1));
  int bound_violations = 0;
  int n_clean = 0, n_affected = 0;
  double max_clean_gap = 0.0, max_affected_gap = 0.0, max_exact_gap = 0.0;
  for (int i = 0; i < opt.instances; ++i) {
    const RandomInstance inst = draw_instance(rng);
    const GridReport oracle = grid_search_report(inst.cfg, inst.ch, grid);
    const OptimizationResult alt = alternating_optimize(inst.cfg, inst.ch);
    if (alt.r_sum > oracle.result.r_sum + oracle.discretization_bound) {
      ++bound_violations;
    }
    const double gap = std::abs(alt.r_sum - oracle.result.r_sum);
    const bool init_pinned = std::abs(alt.policy.theta - 0.5) <= 1e-9;
    if (init_pinned || cap_excess(alt.policy, inst.cfg, inst.ch) > 1e-4 ||
        cap_excess(oracle.result.policy, inst.cfg, inst.ch) > 1e-4) {
      ++n_affected;
      max_affected_gap = std::max(max_affected_gap, gap);
    } else {
      ++n_clean;
      max_clean_gap = std::max(max_clean_gap, gap);
    }
    const ThetaRate exact = sum_rate_given_omega_exact(
        oracle.result.policy.omega, inst.cfg, inst.ch);
    max_exact_gap = std::max(max_exact_gap,
                             std::abs(exact.r_sum - oracle.result.r_sum));
  }
  report.claim(bound_violations == 0,
               "alternating rate <= grid max + bound          violations = " +
                   std::to_string(bound_violations));
  report.claim(max_clean_gap <= 1e-3,
               "alternating matches grid max off the cap/ridge artifacts   max gap = " +
                   fmt2e(max_clean_gap) + " (tol 1e-3, " +
                   std::to_string(n_clean) + " instances)");
  report.claim(max_exact_gap <= closure_tol,
               "exact-theta column solve recovers the grid max everywhere  max gap = " +
                   fmt2e(max_exact_gap) + " (tol " + fmt2e(closure_tol) +
                   ", all instances)");
  report.info("alternating gap on the " + std::to_string(n_affected) +
              " cap-bound or midpoint-pinned instances: max = " +
              fmt2e(max_affected_gap));

  // Crossing formula self-check at Q=2, G=1: the curve-consistent
  // Q/(Q+2G) against the simplification Q/(1+2G), which does not solve
  // the defining equation.
  {
    SystemConfig cfg;
    const BottleneckInputs in{2.0, 1.0, 2.0};
    auto gap_at = [&](double theta) {
      return std::abs(source_limited_rate(theta, in.q_cap, cfg) -
                      relay_limited_rate(theta, in.g_gain, cfg));
    };
    const double derived = theta_intersection(in);
    const double variant = in.q_cap / (1.0 + 2.0 * in.g_gain);
    const double derived_gap = gap_at(derived);
    const double variant_gap = gap_at(variant);
    report.claim(derived == 0.5 && derived_gap <= 1e-10,
                 "crossing check Q=2,G=1: Q/(Q+2G) = " + fmt9(derived) +
                     " gives |F1-F2| = " + fmt2e(derived_gap) + " (tol 1e-10)");
    report.claim(variant_gap > 0.05,
                 "crossing check Q=2,G=1: variant Q/(1+2G) = " + fmt9(variant) +
                     " gives |F1-F2| = " + fmt2e(variant_gap) +
                     " (> 0.05, rejected)");
  }

  out << (report.all_passed() ? "verify: all claims passed\n"
                              : "verify: FAILURES detected\n");
  return report.all_passed() ? 0 : 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Fair-rate throughput of a time-switching wireless-powered "
               "two-way relay, with oracle verification"};
  app.require_subcommand(1);

  OptimizeOptions opt_opts;
  CLI::App* optimize = app.add_subcommand(
      "optimize", "Optimize (theta, omega) for one channel/power point");
  optimize->add_option("--h1", opt_opts.h1, "CNR of the S1-R link (linear)");
  optimize->add_option("--beta-db", opt_opts.beta_db, "H2/H1 in dB");
  optimize->add_option("--ptot-dbw", opt_opts.ptot_dbw, "Total power in dBW");
  optimize->add_option("--eta", opt_opts.eta, "Energy conversion efficiency");
  optimize->add_option("--epsilon", opt_opts.epsilon, "Convergence bias error");
  optimize->add_option("--method", opt_opts.method, "Solver")
      ->check(CLI::IsMember({"alt", "grid", "exact"}));
  optimize->add_option("--grid", opt_opts.grid_points,
                       "Grid points per axis for --method grid");

  SweepOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Sweep beta and P_tot, writing CSV and optional SVG charts");
  sweep->add_option("--h1", sweep_opts.spec.h1, "CNR of the S1-R link");
  sweep->add_option("--beta-db-min", sweep_opts.spec.beta_db_min, "");
  sweep->add_option("--beta-db-max", sweep_opts.spec.beta_db_max, "");
  sweep->add_option("--beta-steps", sweep_opts.spec.beta_steps, "");
  sweep->add_option("--ptot-dbw-min", sweep_opts.spec.ptot_dbw_min, "");
  sweep->add_option("--ptot-dbw-max", sweep_opts.spec.ptot_dbw_max, "");
  sweep->add_option("--ptot-steps", sweep_opts.spec.ptot_steps, "");
  sweep->add_option("--eta", sweep_opts.spec.eta, "Energy conversion efficiency");
  sweep->add_option("--epsilon", sweep_opts.epsilon, "Convergence bias error");
  sweep->add_option("--method", sweep_opts.method, "Solver")
      ->check(CLI::IsMember({"alt", "grid", "exact"}));
  sweep->add_option("--grid", sweep_opts.grid_points,
                    "Grid points per axis for --method grid");
  sweep->add_option("--out", sweep_opts.out_path, "CSV destination")
      ->required();
  sweep->add_option("--svg", sweep_opts.svg_prefix,
                    "Prefix for rendered SVG charts");

  VerifyOptions verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check the closed forms against brute-force oracles");
  verify->add_option("--instances", verify_opts.instances,
                     "Random instances per claim")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", verify_opts.seed, "RNG seed");
  verify->add_option("--grid", verify_opts.grid_points,
                     "Oracle grid points per axis")
      ->check(CLI::Range(3, 100000));

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tswr");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (optimize->parsed()) return run_optimize(opt_opts, out);
    if (sweep->parsed()) return run_sweep_cmd(sweep_opts, out, err);
    return run_verify(verify_opts, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tswr
