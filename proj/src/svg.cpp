// Copyright 2026 The tradeoff-capacity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tradeoff/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace tradeoff::svg {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 70.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kGap = 50.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string tick(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void finish() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    lo = std::min(lo, 0.0);
    if (hi - lo < 1e-12) hi = lo + 1.0;
    hi += 0.05 * (hi - lo);
  }
};

void draw_panel(std::ostringstream& os, const Panel& panel, double x0, double y0, double w,
                double h) {
  Range rx, ry;
  for (const Series& s : panel.series) {
    for (const auto& [x, y] : s.points) {
      rx.add(x);
      ry.add(y);
    }
  }
  rx.finish();
  ry.finish();
  const auto px = [&](double x) { return x0 + (x - rx.lo) / (rx.hi - rx.lo) * w; };
  const auto py = [&](double y) { return y0 + h - (y - ry.lo) / (ry.hi - ry.lo) * h; };

  os << "<g>\n";
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(w)
     << "\" height=\"" << num(h) << "\" fill=\"none\" stroke=\"#444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = rx.lo + (rx.hi - rx.lo) * i / 4.0;
    const double fy = ry.lo + (ry.hi - ry.lo) * i / 4.0;
    os << "<text x=\"" << num(px(fx)) << "\" y=\"" << num(y0 + h + 16)
       << "\" font-size=\"11\" text-anchor=\"middle\">" << tick(fx) << "</text>\n";
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(py(fy) + 4)
       << "\" font-size=\"11\" text-anchor=\"end\">" << tick(fy) << "</text>\n";
  }
  os << "<text x=\"" << num(x0 + w / 2) << "\" y=\"" << num(y0 - 10)
     << "\" font-size=\"13\" text-anchor=\"middle\">" << escape(panel.title) << "</text>\n";
  os << "<text x=\"" << num(x0 + w / 2) << "\" y=\"" << num(y0 + h + 36)
     << "\" font-size=\"12\" text-anchor=\"middle\">" << escape(panel.x_label) << "</text>\n";
  os << "<text x=\"" << num(x0 - 42) << "\" y=\"" << num(y0 + h / 2)
     << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 " << num(x0 - 42)
     << " " << num(y0 + h / 2) << ")\">" << escape(panel.y_label) << "</text>\n";

  double legend_y = y0 + 14;
  for (const Series& s : panel.series) {
    if (s.points.empty()) continue;
    if (s.markers) {
      for (const auto& [x, y] : s.points) {
        os << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
           << "\" r=\"2.5\" fill=\"" << s.color << "\"/>\n";
      }
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.8\"";
      if (s.dashed) os << " stroke-dasharray=\"6 4\"";
      os << " points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) os << ' ';
        os << num(px(s.points[i].first)) << ',' << num(py(s.points[i].second));
      }
      os << "\"/>\n";
    }
    if (!s.label.empty()) {
      os << "<text x=\"" << num(x0 + w - 6) << "\" y=\"" << num(legend_y)
         << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << s.color << "\">"
         << escape(s.label) << "</text>\n";
      legend_y += 14;
    }
  }
  os << "</g>\n";
}

std::vector<std::pair<double, double>> xy(const TradeoffCurve& curve) {
  std::vector<std::pair<double, double>> pts;
  for (const RatePoint& p : curve.points) pts.emplace_back(p.c, p.second);
  return pts;
}

}  // namespace

std::string render(const std::string& title, const std::vector<Panel>& panels) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\" width=\"800\" "
        "height=\"600\" font-family=\"sans-serif\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<text x=\"400\" y=\"26\" font-size=\"16\" text-anchor=\"middle\">" << escape(title)
     << "</text>\n";
  const double count = std::max<std::size_t>(1, panels.size());
  const double w = (kWidth - kLeft - kRight - (count - 1) * (kGap + kLeft - 20)) / count;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double x0 = kLeft + i * (w + kGap + kLeft - 20);
    draw_panel(os, panels[i], x0, kTop, w, kHeight - kTop - kBottom);
  }
  os << "</svg>\n";
  return os.str();
}

std::string curve_chart(const TradeoffCurve& curve, const std::string& title) {
  Panel panel;
  const bool cq = curve.kind == CurveKind::CQ;
  panel.title = cq ? "CQ trade-off" : "CE trade-off";
  panel.x_label = "C (cbits / channel use)";
  panel.y_label = cq ? "Q (qubits / channel use)" : "E (ebits / channel use)";
  Series s{"trade-off curve", xy(curve), "#1f77b4", false, false};
  panel.series.push_back(s);
  if (!curve.points.empty()) {
    const RatePoint& a = curve.points.front();
    const RatePoint& b = curve.points.back();
    panel.series.push_back(
        {"time-sharing", {{a.c, a.second}, {b.c, b.second}}, "#d62728", true, false});
  }
  return render(title, {panel});
}

std::string region_chart(const CQERegion& region, const std::vector<RateTriple>& corners,
                         const std::string& title) {
  Panel cq{"(C, Q) at E = 0", "C (cbits)", "Q (qubits)", {}};
  cq.series.push_back({"CQ curve", xy(region.cq_curve), "#1f77b4", false, false});
  cq.series.push_back({"C + 2Q = h", {{0.0, region.h / 2}, {region.h, 0.0}}, "#7f7f7f", true,
                       false});
  Panel ce{"(C, E) at Q = 0", "C (cbits)", "E (ebits)", {}};
  ce.series.push_back({"CE curve", xy(region.ce_curve), "#2ca02c", false, false});
  Panel qe{"(Q, E)", "Q (qubits)", "E (ebits)", {}};

  Series cq_corner{"CEF corners", {}, "#d62728", false, true};
  Series ce_corner{"CEF corners", {}, "#d62728", false, true};
  Series qe_corner{"CEF corners", {}, "#d62728", false, true};
  for (const RateTriple& t : corners) {
    cq_corner.points.emplace_back(t.c, t.q);
    ce_corner.points.emplace_back(t.c, t.e);
    qe_corner.points.emplace_back(t.q, t.e);
  }
  cq.series.push_back(cq_corner);
  ce.series.push_back(ce_corner);
  qe.series.push_back(qe_corner);
  return render(title, {cq, ce, qe});
}

std::string gain_chart(const std::vector<GainSweepRow>& rows, const std::string& x_label,
                       const std::string& title) {
  Panel panel{"relative gain over time-sharing", x_label, "gain", {}};
  Series g_cq{"G_CQ", {}, "#1f77b4", false, false};
  Series g_ce{"G_CE", {}, "#ff7f0e", true, false};
  for (const GainSweepRow& r : rows) {
    g_cq.points.emplace_back(r.param, r.cq.gain);
    g_ce.points.emplace_back(r.param, r.ce.gain);
  }
  panel.series = {g_cq, g_ce};
  return render(title, {panel});
}

}  // namespace tradeoff::svg
