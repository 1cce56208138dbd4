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

// Minimal standalone SVG line charts (800 x 600 viewBox).

#include <string>
#include <utility>
#include <vector>

#include "tradeoff/gain.hpp"
#include "tradeoff/region.hpp"

namespace tradeoff::svg {

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
  std::string color = "#1f77b4";
  bool dashed = false;
  bool markers = false;
};

struct Panel {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

/// Panels are laid out side by side under a common title.
std::string render(const std::string& title, const std::vector<Panel>& panels);

/// Trade-off curve with the time-sharing chord between its endpoints.
std::string curve_chart(const TradeoffCurve& curve, const std::string& title);

/// Projections of the region onto the (C,Q), (C,E) and (Q,E) planes: the two
/// curves, the plane bound, and the classically-enhanced father corners.
std::string region_chart(const CQERegion& region, const std::vector<RateTriple>& corners,
                         const std::string& title);

/// G_CQ and G_CE against the family parameter.
std::string gain_chart(const std::vector<GainSweepRow>& rows, const std::string& x_label,
                       const std::string& title);

}  // namespace tradeoff::svg
