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

#include "tswr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "tswr/baseline.hpp"

namespace tswr {
namespace {

double axis_value(double lo, double hi, int steps, int index) {
  if (steps == 1) return lo;
  return lo + (hi - lo) * index / (steps - 1);
}

// %.9g: up to nine significant digits, '.' decimal separator under the
// default C locale, byte-stable for identical doubles.
void append_value(std::string& line, double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  line += buf;
}

}  // namespace

void SweepSpec::validate() const {
  if (!(h1 > 0.0) || !std::isfinite(h1)) {
    throw std::invalid_argument("SweepSpec: h1 must be positive");
  }
  if (beta_steps < 1 || ptot_steps < 1) {
    throw std::invalid_argument("SweepSpec: steps must be at least 1");
  }
  if (beta_db_min > beta_db_max) {
    throw std::invalid_argument("SweepSpec: beta_db_min exceeds beta_db_max");
  }
  if (ptot_dbw_min > ptot_dbw_max) {
    throw std::invalid_argument("SweepSpec: ptot_dbw_min exceeds ptot_dbw_max");
  }
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("SweepSpec: eta must lie in (0, 1]");
  }
}

double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

ChannelState cnr_from_beta(double h1, double beta_db) {
  if (!(h1 > 0.0)) {
    throw std::invalid_argument("cnr_from_beta: h1 must be positive");
  }
  return {h1, h1 * linear_from_db(beta_db)};
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, Method method,
                                double epsilon, const GridSpec& grid) {
  spec.validate();
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(spec.beta_steps) *
               static_cast<size_t>(spec.ptot_steps));
  for (int bi = 0; bi < spec.beta_steps; ++bi) {
    const double beta_db =
        axis_value(spec.beta_db_min, spec.beta_db_max, spec.beta_steps, bi);
    const ChannelState ch = cnr_from_beta(spec.h1, beta_db);
    for (int pi = 0; pi < spec.ptot_steps; ++pi) {
      const double ptot_dbw =
          axis_value(spec.ptot_dbw_min, spec.ptot_dbw_max, spec.ptot_steps, pi);
      SystemConfig cfg;
      cfg.p_tot = linear_from_db(ptot_dbw);
      cfg.eta = spec.eta;
      cfg.epsilon = epsilon;

      OptimizationResult opt;
      switch (method) {
        case Method::alternating:
          opt = alternating_optimize(cfg, ch);
          break;
        case Method::exact_theta:
          opt = alternating_optimize_exact(cfg, ch);
          break;
        case Method::grid:
          opt = grid_search(cfg, ch, grid);
          break;
      }
      const double benchmark = non_eh_msr(cfg, ch);
      rows.push_back({beta_db, ptot_dbw, spec.eta, opt.policy.theta,
                      opt.policy.omega, opt.r_sum, benchmark,
                      relative_gain(opt.r_sum, benchmark), opt.converged});
    }
  }
  return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
  if (rows.empty()) {
    throw std::invalid_argument("emit_csv: no rows to write");
  }
  out << "beta_db,ptot_dbw,eta,theta_star,omega_star,r_sum_ts,r_sum_non_eh,"
         "gain_ts_vs_non_eh\n";
  for (const SweepRow& row : rows) {
    std::string line;
    line.reserve(160);
    const double values[] = {row.beta_db,    row.ptot_dbw,
                             row.eta,        row.theta_star,
                             row.omega_star, row.r_sum_ts,
                             row.r_sum_non_eh, row.gain_ts_vs_non_eh};
    for (size_t i = 0; i < 8; ++i) {
      if (i > 0) line += ',';
      append_value(line, values[i]);
    }
    line += '\n';
    out << line;
  }
}

void emit_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_csv: cannot open " + path + " for writing");
  }
  emit_csv(rows, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("emit_csv: write to " + path + " failed");
  }
}

}  // namespace tswr
