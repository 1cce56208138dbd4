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

#include "tradeoff/serial.hpp"

namespace tradeoff::serial {

std::vector<RatePoint> evaluate_grid(const CurveEvaluator& eval, CurveKind kind,
                                     int grid_size) {
  const std::vector<double> grid = mu_grid(grid_size);
  std::vector<RatePoint> points;
  points.reserve(grid.size());
  for (double mu : grid) points.push_back(eval.point(kind, mu));
  return points;
}

std::vector<std::vector<double>> evaluate_stream(const SampleStream& stream, CurveKind kind,
                                                 const std::vector<double>& lambdas) {
  for (double l : lambdas) check_lambda(kind, l);
  const int total = stream.total();
  std::vector<std::vector<double>> out(lambdas.size(), std::vector<double>(total));
  for (int i = 0; i < total; ++i) {
    const CQQuantities q = cq_quantities(stream.channel, stream.ensemble(i));
    for (std::size_t l = 0; l < lambdas.size(); ++l) out[l][i] = objective(kind, lambdas[l], q);
  }
  return out;
}

std::vector<GainSweepRow> gain_sweep(std::span<const ChannelFamily> families, int grid_size) {
  std::vector<GainSweepRow> rows;
  rows.reserve(families.size());
  for (const ChannelFamily& f : families) {
    GainSweepRow row;
    row.param = family_parameter(f);
    const CurveEvaluator eval(f);
    for (CurveKind kind : {CurveKind::CQ, CurveKind::CE}) {
      TradeoffCurve raw{kind, f, serial::evaluate_grid(eval, kind, grid_size), false};
      (kind == CurveKind::CQ ? row.cq : row.ce) = compute_gain(convexify(std::move(raw)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace tradeoff::serial
