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

// Closed-form CQ and CE trade-off curves of the three families, sampled on a
// mu-grid over [0, 1/2] and convexified.

#include <functional>
#include <optional>
#include <vector>

#include "tradeoff/channels.hpp"

namespace tradeoff {

enum class CurveKind { CQ, CE };

const char* kind_name(CurveKind kind);

struct RatePoint {
  double c = 0.0;       // bits per channel use
  double second = 0.0;  // qubits (CQ) or ebits consumed (CE) per channel use
  CurveKind kind = CurveKind::CQ;
  double mu = 0.0;
};

struct TradeoffCurve {
  CurveKind kind = CurveKind::CQ;
  ChannelFamily family;
  std::vector<RatePoint> points;  // increasing mu
  bool convexified = false;
};

/// 1/2 + 1/2 sqrt(1 - 16 (p/2)(1 - p/2) mu (1 - mu)).
double dephasing_gamma(double mu, double p);

/// Sum over i = 0..n of lambda_i log2 lambda_i with lambda_i = (n-2i)mu + i,
/// and the same over eta_i = (n-1-2i)mu + i + 1, i = 0..n-1.
struct CloningSums {
  double s_lambda = 0.0;
  double s_eta = 0.0;
};
CloningSums cloning_sums(int n, double mu);

/// Evaluates both closed-form points of one family. Unruh block weights are
/// computed once at construction.
class CurveEvaluator {
 public:
  explicit CurveEvaluator(const ChannelFamily& family);

  const ChannelFamily& family() const noexcept { return family_; }

  /// Throws DomainError("mu") outside [0, 1/2].
  RatePoint cq(double mu) const;
  RatePoint ce(double mu) const;
  RatePoint point(CurveKind kind, double mu) const;

  /// Both points from one pass over the block sums.
  std::pair<RatePoint, RatePoint> both(double mu) const;

 private:
  ChannelFamily family_;
  std::optional<UnruhBlockWeights> unruh_;
};

RatePoint cq_point(const ChannelFamily& family, double mu);
RatePoint ce_point(const ChannelFamily& family, double mu);

/// mu_k = (1/2) k / (grid_size - 1), k = 0..grid_size-1. Throws DomainError
/// ("grid") if grid_size < 2.
std::vector<double> mu_grid(int grid_size);

/// Closed-form points on the mu-grid, computed in parallel.
std::vector<RatePoint> evaluate_grid(const CurveEvaluator& eval, CurveKind kind,
                                     int grid_size);

/// Replaces the points by the boundary of their convex hull in the
/// beneficial direction (upper hull in (C, Q), lower hull in (C, E)),
/// restricted to its Pareto part and reordered by increasing mu.
TradeoffCurve convexify(TradeoffCurve curve);

TradeoffCurve sample_curve(const ChannelFamily& family, CurveKind kind, int grid_size);

struct ScalarMaximum {
  double mu = 0.0;
  double value = 0.0;
};

/// Grid maximum of f over [0, 1/2] followed by golden-section search on the
/// bracketing cells to 1e-10 in mu. Ties keep the smallest mu. The grid
/// is evaluated in parallel, so f must be safe to call concurrently.
ScalarMaximum maximize_over_mu(const std::function<double(double)>& f, int grid_size = 512);

/// h = max_mu I(AX;B), the CE curve's largest C coordinate.
double ea_classical_capacity(const ChannelFamily& family, int grid_size = 512);

}  // namespace tradeoff
