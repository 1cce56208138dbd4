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

#include "tradeoff/gain.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "tradeoff/errors.hpp"
#include "tradeoff/parallel.hpp"

namespace tradeoff {

GainReport compute_gain(const TradeoffCurve& curve) {
  if (!curve.convexified) throw ContractError("gain needs a convexified curve");
  if (curve.points.size() < 2) throw ContractError("gain needs at least two curve points");

  std::vector<RatePoint> pts = curve.points;
  std::stable_sort(pts.begin(), pts.end(),
                   [](const RatePoint& a, const RatePoint& b) { return a.c < b.c; });

  GainReport r;
  r.kind = curve.kind;
  double y_min = pts.front().second, y_max = pts.front().second;
  for (const RatePoint& p : pts) {
    y_min = std::min(y_min, p.second);
    y_max = std::max(y_max, p.second);
  }
  const double c_span = pts.back().c - pts.front().c;

  CompensatedSum area;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    area += 0.5 * (pts[i].second + pts[i - 1].second) * (pts[i].c - pts[i - 1].c);
  }
  r.a_curve = area.value();
  r.a_chord = 0.5 * (pts.front().second + pts.back().second) * c_span;

  if (c_span < kDegenerateSpan || y_max - y_min < kDegenerateSpan) {
    r.degenerate = true;
    r.gain = 1.0;
    return r;
  }
  r.gain = curve.kind == CurveKind::CQ ? r.a_curve / r.a_chord : r.a_chord / r.a_curve;
  return r;
}

double family_parameter(const ChannelFamily& family) {
  if (const auto* d = std::get_if<Dephasing>(&family)) return d->p;
  if (const auto* c = std::get_if<Cloning>(&family)) return c->n;
  return std::get<Unruh>(family).z;
}

std::vector<GainSweepRow> gain_sweep(std::span<const ChannelFamily> families, int grid_size) {
  for (const ChannelFamily& f : families) validate(f);
  std::vector<GainSweepRow> rows(families.size());
  std::vector<std::exception_ptr> errors(families.size());
  const int n = static_cast<int>(families.size());
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      rows[i].param = family_parameter(families[i]);
      rows[i].cq = compute_gain(sample_curve(families[i], CurveKind::CQ, grid_size));
      rows[i].ce = compute_gain(sample_curve(families[i], CurveKind::CE, grid_size));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

}  // namespace tradeoff
