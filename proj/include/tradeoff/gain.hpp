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

#pragma once

// Time-sharing gains: area under a trade-off curve against the area under
// the chord joining its endpoints, both integrated over the C axis.

#include <span>
#include <vector>

#include "tradeoff/curves.hpp"

namespace tradeoff {

struct GainReport {
  CurveKind kind = CurveKind::CQ;
  double a_curve = 0.0;
  double a_chord = 0.0;
  double gain = 1.0;  // CQ: a_curve / a_chord; CE: a_chord / a_curve
  bool degenerate = false;
};

/// Spans below this on either axis make the gain degenerate (gain = 1).
inline constexpr double kDegenerateSpan = 1e-9;

/// Throws ContractError unless the curve is convexified with >= 2 points.
GainReport compute_gain(const TradeoffCurve& curve);

struct GainSweepRow {
  double param = 0.0;  // p, n or z of the family
  GainReport cq;
  GainReport ce;
};

/// The family's own parameter (p, n or z) as a double.
double family_parameter(const ChannelFamily& family);

/// Gains of each family in parallel, rows in input order.
std::vector<GainSweepRow> gain_sweep(std::span<const ChannelFamily> families,
                                     int grid_size = 512);

}  // namespace tradeoff
