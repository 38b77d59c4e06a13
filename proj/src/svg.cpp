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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tswr/sweep.hpp"

namespace tswr {
namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 520;
constexpr double kLeft = 74;
constexpr double kTop = 48;
constexpr double kBottom = 58;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct Frame {
  double x0, y0, x1, y1;  // plot rectangle, y grows downward
  double xmin, xmax, ymin, ymax;

  double px(double x) const {
    return x0 + (x - xmin) / (xmax - xmin) * (x1 - x0);
  }
  double py(double y) const {
    return y1 - (y - ymin) / (ymax - ymin) * (y1 - y0);
  }
};

void open_svg(std::ostream& out, const std::string& title) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
      << kHeight << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2
      << "\" y=\"26\" text-anchor=\"middle\" font-size=\"17\">" << title
      << "</text>\n";
}

void draw_axes(std::ostream& out, const Frame& f, const std::string& xlabel,
               const std::string& ylabel) {
  out << "<rect x=\"" << num(f.x0) << "\" y=\"" << num(f.y0) << "\" width=\""
      << num(f.x1 - f.x0) << "\" height=\"" << num(f.y1 - f.y0)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  const int ticks = 5;
  for (int i = 0; i <= ticks; ++i) {
    const double tx = f.xmin + (f.xmax - f.xmin) * i / ticks;
    const double ty = f.ymin + (f.ymax - f.ymin) * i / ticks;
    const double px = f.px(tx);
    const double py = f.py(ty);
    out << "<line x1=\"" << num(px) << "\" y1=\"" << num(f.y1) << "\" x2=\""
        << num(px) << "\" y2=\"" << num(f.y1 + 5) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(px) << "\" y=\"" << num(f.y1 + 19)
        << "\" text-anchor=\"middle\" font-size=\"12\">" << label(tx)
        << "</text>\n";
    out << "<line x1=\"" << num(f.x0 - 5) << "\" y1=\"" << num(py)
        << "\" x2=\"" << num(f.x0) << "\" y2=\"" << num(py)
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << num(f.x0 - 8) << "\" y=\"" << num(py + 4)
        << "\" text-anchor=\"end\" font-size=\"12\">" << label(ty)
        << "</text>\n";
  }
  out << "<text x=\"" << num((f.x0 + f.x1) / 2) << "\" y=\""
      << num(f.y1 + 42) << "\" text-anchor=\"middle\" font-size=\"14\">"
      << xlabel << "</text>\n";
  out << "<text x=\"18\" y=\"" << num((f.y0 + f.y1) / 2)
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 18 "
      << num((f.y0 + f.y1) / 2) << ")\">" << ylabel << "</text>\n";
}

// Three-stop gradient, deep blue -> teal -> yellow, t in [0,1].
std::string color_scale(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double stops[3][3] = {{32, 48, 111}, {42, 157, 143}, {244, 230, 58}};
  const double s = t * 2.0;
  const int k = s < 1.0 ? 0 : 1;
  const double u = s - k;
  char buf[12];
  std::snprintf(buf, sizeof(buf), "#%02x%02x%02x",
                static_cast<int>(std::lround(stops[k][0] * (1 - u) + stops[k + 1][0] * u)),
                static_cast<int>(std::lround(stops[k][1] * (1 - u) + stops[k + 1][1] * u)),
                static_cast<int>(std::lround(stops[k][2] * (1 - u) + stops[k + 1][2] * u)));
  return buf;
}

void polyline(std::ostream& out, const Frame& f,
              const std::vector<std::pair<double, double>>& pts,
              const std::string& color) {
  out << "<polyline fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1.8\" points=\"";
  for (size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) out << ' ';
    out << num(f.px(pts[i].first)) << ',' << num(f.py(pts[i].second));
  }
  out << "\"/>\n";
}

void legend(std::ostream& out, const std::string& name_a,
            const std::string& color_a, const std::string& name_b,
            const std::string& color_b) {
  const double x = kWidth - 190;
  out << "<rect x=\"" << x << "\" y=\"56\" width=\"160\" height=\"44\" "
         "fill=\"white\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << x + 10 << "\" y1=\"70\" x2=\"" << x + 38
      << "\" y2=\"70\" stroke=\"" << color_a << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << x + 46 << "\" y=\"74\" font-size=\"13\">" << name_a
      << "</text>\n";
  out << "<line x1=\"" << x + 10 << "\" y1=\"88\" x2=\"" << x + 38
      << "\" y2=\"88\" stroke=\"" << color_b << "\" stroke-width=\"2\"/>\n"
      << "<text x=\"" << x + 46 << "\" y=\"92\" font-size=\"13\">" << name_b
      << "</text>\n";
}

void render_lines(const std::vector<SweepRow>& rows, bool against_beta,
                  std::ostream& out) {
  std::vector<double> betas, ptots;
  for (const SweepRow& r : rows) {
    betas.push_back(r.beta_db);
    ptots.push_back(r.ptot_dbw);
  }
  betas = sorted_unique(betas);
  ptots = sorted_unique(ptots);
  const auto& axis = against_beta ? betas : ptots;
  const auto& fixed = against_beta ? ptots : betas;
  if (axis.size() < 2) {
    throw std::invalid_argument(
        "render_svg: line chart needs at least two points along its axis");
  }
  if (fixed.size() != 1) {
    throw std::invalid_argument(
        "render_svg: line chart needs a single value on the fixed axis");
  }

  std::vector<std::pair<double, double>> ts, bench;
  for (const SweepRow& r : rows) {
    const double x = against_beta ? r.beta_db : r.ptot_dbw;
    ts.emplace_back(x, r.r_sum_ts);
    bench.emplace_back(x, r.r_sum_non_eh);
  }
  std::sort(ts.begin(), ts.end());
  std::sort(bench.begin(), bench.end());

  double ymax = 0.0;
  for (const SweepRow& r : rows) {
    ymax = std::max({ymax, r.r_sum_ts, r.r_sum_non_eh});
  }
  if (ymax <= 0.0) ymax = 1.0;

  Frame f{kLeft, kTop, kWidth - 30, kHeight - kBottom,
          axis.front(), axis.back(), 0.0, ymax * 1.06};
  const std::string fixed_name = against_beta ? "P_tot" : "beta";
  const std::string fixed_unit = against_beta ? " dBW" : " dB";
  open_svg(out, std::string("Max fair sum rate vs ") +
                    (against_beta ? "beta" : "P_tot") + " (" + fixed_name +
                    " = " + label(fixed.front()) + fixed_unit + ")");
  draw_axes(out, f, against_beta ? "beta [dB]" : "P_tot [dBW]",
            "max fair sum rate");
  polyline(out, f, ts, "#1f77b4");
  polyline(out, f, bench, "#d62728");
  legend(out, "TS-TWR", "#1f77b4", "non-EH", "#d62728");
  out << "</svg>\n";
}

void render_heatmap(const std::vector<SweepRow>& rows, bool gain,
                    std::ostream& out) {
  std::vector<double> betas, ptots;
  for (const SweepRow& r : rows) {
    betas.push_back(r.beta_db);
    ptots.push_back(r.ptot_dbw);
  }
  betas = sorted_unique(betas);
  ptots = sorted_unique(ptots);
  if (betas.size() < 2 || ptots.size() < 2) {
    throw std::invalid_argument(
        "render_svg: surface needs at least two values per axis");
  }
  if (rows.size() != betas.size() * ptots.size()) {
    throw std::invalid_argument("render_svg: rows do not form a full lattice");
  }
  std::map<std::pair<double, double>, double> cells;
  double vmin = std::numeric_limits<double>::infinity();
  double vmax = -vmin;
  for (const SweepRow& r : rows) {
    const double v = gain ? r.gain_ts_vs_non_eh : r.r_sum_ts;
    if (!cells.emplace(std::make_pair(r.beta_db, r.ptot_dbw), v).second) {
      throw std::invalid_argument("render_svg: duplicate lattice cell");
    }
    vmin = std::min(vmin, v);
    vmax = std::max(vmax, v);
  }
  const double span = vmax > vmin ? vmax - vmin : 1.0;

  Frame f{kLeft, kTop, kWidth - 120, kHeight - kBottom,
          betas.front(), betas.back(), ptots.front(), ptots.back()};
  open_svg(out, gain ? "Relative gain of TS-TWR over non-EH"
                     : "TS-TWR max fair sum rate");

  const double cw = (f.x1 - f.x0) / betas.size();
  const double chh = (f.y1 - f.y0) / ptots.size();
  for (size_t bi = 0; bi < betas.size(); ++bi) {
    for (size_t pi = 0; pi < ptots.size(); ++pi) {
      const double v = cells.at({betas[bi], ptots[pi]});
      out << "<rect x=\"" << num(f.x0 + bi * cw) << "\" y=\""
          << num(f.y1 - (pi + 1) * chh) << "\" width=\"" << num(cw + 0.5)
          << "\" height=\"" << num(chh + 0.5) << "\" fill=\""
          << color_scale((v - vmin) / span) << "\"/>\n";
    }
  }
  draw_axes(out, f, "beta [dB]", "P_tot [dBW]");

  // Color bar with the value range, low at the bottom.
  const double bar_x = kWidth - 92;
  const double bar_h = f.y1 - f.y0;
  const int strips = 48;
  for (int i = 0; i < strips; ++i) {
    out << "<rect x=\"" << bar_x << "\" y=\""
        << num(f.y1 - bar_h * (i + 1) / strips) << "\" width=\"18\" height=\""
        << num(bar_h / strips + 0.5) << "\" fill=\""
        << color_scale((i + 0.5) / strips) << "\"/>\n";
  }
  out << "<rect x=\"" << bar_x << "\" y=\"" << num(f.y0)
      << "\" width=\"18\" height=\"" << num(bar_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << bar_x + 24 << "\" y=\"" << num(f.y1 + 4)
      << "\" font-size=\"12\">" << label(vmin) << "</text>\n";
  out << "<text x=\"" << bar_x + 24 << "\" y=\"" << num(f.y0 + 10)
      << "\" font-size=\"12\">" << label(vmax) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace

const char* chart_name(ChartKind kind) {
  switch (kind) {
    case ChartKind::surface_as_heatmap: return "surface-as-heatmap";
    case ChartKind::msr_vs_beta: return "msr-vs-beta";
    case ChartKind::msr_vs_ptot: return "msr-vs-ptot";
    case ChartKind::gain_surface: return "gain-surface";
  }
  return "unknown";
}

void render_svg(const std::vector<SweepRow>& rows, ChartKind kind,
                std::ostream& out) {
  if (rows.empty()) {
    throw std::invalid_argument("render_svg: no rows");
  }
  switch (kind) {
    case ChartKind::msr_vs_beta:
      render_lines(rows, /*against_beta=*/true, out);
      break;
    case ChartKind::msr_vs_ptot:
      render_lines(rows, /*against_beta=*/false, out);
      break;
    case ChartKind::surface_as_heatmap:
      render_heatmap(rows, /*gain=*/false, out);
      break;
    case ChartKind::gain_surface:
      render_heatmap(rows, /*gain=*/true, out);
      break;
  }
}

void render_svg(const std::vector<SweepRow>& rows, ChartKind kind,
                const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("render_svg: cannot open " + path +
                             " for writing");
  }
  render_svg(rows, kind, out);
  out.flush();
  if (!out) {
    throw std::runtime_error("render_svg: write to " + path + " failed");
  }
}

}  // namespace tswr
