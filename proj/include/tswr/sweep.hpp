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

#ifndef TSWR_SWEEP_HPP_
#define TSWR_SWEEP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "tswr/model.hpp"
#include "tswr/oracle.hpp"
#include "tswr/solver.hpp"

// Parameter-sweep harness: runs the optimizer over a (beta, P_tot) lattice,
// emits the rows as CSV and renders simple standalone SVG charts. dB values
// are converted to linear units once, at this boundary; everything below
// works in watts and linear CNRs.

namespace tswr {

/// Sweep axes. Defaults cover H1 = 1, beta and P_tot from -10 to 10 in
/// 1 dB steps, eta = 1.
struct SweepSpec {
  double h1 = 1.0;
  double beta_db_min = -10.0;
  double beta_db_max = 10.0;
  int beta_steps = 21;
  double ptot_dbw_min = -10.0;
  double ptot_dbw_max = 10.0;
  int ptot_steps = 21;
  double eta = 1.0;

  void validate() const;
};

/// One optimized sweep cell. converged is bookkeeping for exit status and
/// is not part of the CSV schema.
struct SweepRow {
  double beta_db;
  double ptot_dbw;
  double eta;
  double theta_star;
  double omega_star;
  double r_sum_ts;
  double r_sum_non_eh;
  double gain_ts_vs_non_eh;
  bool converged;
};

/// 10^(db/10).
double linear_from_db(double db);

/// Channel pair with h2 = h1 * 10^(beta_db/10).
ChannelState cnr_from_beta(double h1, double beta_db);

/// Row-major sweep (beta outer, P_tot inner). epsilon feeds the alternating
/// solver; grid is only consulted for Method::grid.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, Method method,
                                double epsilon = 1e-9,
                                const GridSpec& grid = {});

/// CSV with the fixed header
/// beta_db,ptot_dbw,eta,theta_star,omega_star,r_sum_ts,r_sum_non_eh,gain_ts_vs_non_eh
/// and 9-significant-digit values, LF endings, no trailing blank line.
/// Throws std::invalid_argument on empty input.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& out);
void emit_csv(const std::vector<SweepRow>& rows, const std::string& path);

enum class ChartKind {
  surface_as_heatmap,  // r_sum_ts over the (beta, P_tot) plane
  msr_vs_beta,         // TS and non-EH rates against beta at one P_tot
  msr_vs_ptot,         // TS and non-EH rates against P_tot at one beta
  gain_surface,        // gain_ts_vs_non_eh over the plane
};

const char* chart_name(ChartKind kind);

/// Standalone SVG chart of the rows. Line charts need at least two points
/// along their axis and exactly one value on the other; surfaces need a
/// complete lattice with at least two values per axis. Violations throw
/// std::invalid_argument.
void render_svg(const std::vector<SweepRow>& rows, ChartKind kind,
                std::ostream& out);
void render_svg(const std::vector<SweepRow>& rows, ChartKind kind,
                const std::string& path);

}  // namespace tswr

#endif  // TSWR_SWEEP_HPP_
