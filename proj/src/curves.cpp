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

#include "tradeoff/curves.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tradeoff/errors.hpp"
#include "tradeoff/parallel.hpp"

namespace tradeoff {

namespace {

constexpr double kCollinear = 1e-12;
constexpr double kGoldenTol = 1e-10;

void check_mu(double mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw DomainError("mu", "curve parameter must lie in [0, 1/2], got " + std::to_string(mu));
  }
}

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.c - o.c) * (b.second - o.second) - (a.second - o.second) * (b.c - o.c);
}

double golden_section(const std::function<double(double)>& f, double lo, double hi,
                      double& best_value) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > kGoldenTol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  const double mid = 0.5 * (a + b);
  best_value = f(mid);
  return mid;
}

}  // namespace

const char* kind_name(CurveKind kind) { return kind == CurveKind::CQ ? "cq" : "ce"; }

double dephasing_gamma(double mu, double p) {
  check_mu(mu);
  validate(Dephasing{p});
  const double radicand = 1.0 - 16.0 * (p / 2.0) * (1.0 - p / 2.0) * mu * (1.0 - mu);
  return 0.5 + 0.5 * std::sqrt(std::max(0.0, radicand));
}

CloningSums cloning_sums(int n, double mu) {
  CompensatedSum s_lambda, s_eta;
  for (int i = 0; i <= n; ++i) s_lambda += xlog2x((n - 2.0 * i) * mu + i);
  for (int i = 0; i < n; ++i) s_eta += xlog2x((n - 1.0 - 2.0 * i) * mu + i + 1.0);
  return {s_lambda.value(), s_eta.value()};
}

CurveEvaluator::CurveEvaluator(const ChannelFamily& family) : family_(family) {
  validate(family_);
  if (const auto* u = std::get_if<Unruh>(&family_)) {
    unruh_ = unruh_block_weights(u->z, u->tail_tol);
  }
}

std::pair<RatePoint, RatePoint> CurveEvaluator::both(double mu) const {
  check_mu(mu);
  const double h_mu = binary_entropy(mu);
  double c_cq = 0.0, q_cq = 0.0, c_ce = 0.0;
  if (const auto* d = std::get_if<Dephasing>(&family_)) {
    const double h_gamma = binary_entropy(dephasing_gamma(mu, d->p));
    c_cq = 1.0 - h_mu;
    q_cq = h_mu - h_gamma;
    c_ce = 1.0 + h_mu - h_gamma;
  } else if (const auto* cl = std::get_if<Cloning>(&family_)) {
    const int n = cl->n;
    const double delta = n * (n + 1.0) / 2.0;
    const CloningSums s = cloning_sums(n, mu);
    c_cq = 1.0 - std::log2(static_cast<double>(n)) + s.s_lambda / delta;
    q_cq = (s.s_eta - s.s_lambda) / delta;
    c_ce = 1.0 - std::log2(static_cast<double>(n)) + h_mu + s.s_eta / delta;
  } else {
    CompensatedSum cq, qq, ce;
    for (const UnruhBlock& block : unruh_->blocks) {
      const int n = block.l - 1;
      const double delta = n * (n + 1.0) / 2.0;
      const CloningSums s = cloning_sums(n, mu);
      const double base = 1.0 - std::log2(static_cast<double>(n));
      cq += block.weight * (base + s.s_lambda / delta);
      qq += block.weight * ((s.s_eta - s.s_lambda) / delta);
      ce += block.weight * (base + s.s_eta / delta);
    }
    c_cq = cq.value();
    q_cq = qq.value();
    c_ce = h_mu + ce.value();
  }
  return {RatePoint{c_cq, q_cq, CurveKind::CQ, mu}, RatePoint{c_ce, h_mu, CurveKind::CE, mu}};
}

RatePoint CurveEvaluator::cq(double mu) const { return both(mu).first; }
RatePoint CurveEvaluator::ce(double mu) const { return both(mu).second; }

RatePoint CurveEvaluator::point(CurveKind kind, double mu) const {
  const auto pts = both(mu);
  return kind == CurveKind::CQ ? pts.first : pts.second;
}

RatePoint cq_point(const ChannelFamily& family, double mu) {
  return CurveEvaluator(family).cq(mu);
}

RatePoint ce_point(const ChannelFamily& family, double mu) {
  return CurveEvaluator(family).ce(mu);
}

std::vector<double> mu_grid(int grid_size) {
  if (grid_size < 2) {
    throw DomainError("grid", "grid size must be at least 2, got " + std::to_string(grid_size));
  }
  std::vector<double> grid(grid_size);
  for (int k = 0; k < grid_size; ++k) grid[k] = 0.5 * k / (grid_size - 1.0);
  grid.back() = 0.5;
  return grid;
}

std::vector<RatePoint> evaluate_grid(const CurveEvaluator& eval, CurveKind kind,
                                     int grid_size) {
  const std::vector<double> grid = mu_grid(grid_size);
  std::vector<RatePoint> points(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 8)
  for (int k = 0; k < n; ++k) points[k] = eval.point(kind, grid[k]);
  return points;
}

TradeoffCurve convexify(TradeoffCurve curve) {
  std::vector<RatePoint>& pts = curve.points;
  if (pts.size() < 3) {
    std::sort(pts.begin(), pts.end(),
              [](const RatePoint& a, const RatePoint& b) { return a.mu < b.mu; });
    curve.convexified = true;
    return curve;
  }
  std::vector<RatePoint> sorted = pts;
  std::sort(sorted.begin(), sorted.end(), [](const RatePoint& a, const RatePoint& b) {
    return a.c < b.c || (a.c == b.c && a.second < b.second);
  });

  // Upper hull keeps clockwise turns, lower hull counter-clockwise ones;
  // collinear middles are dropped in both.
  const bool upper = curve.kind == CurveKind::CQ;
  std::vector<RatePoint> hull;
  for (const RatePoint& p : sorted) {
    while (hull.size() >= 2) {
      const double turn = cross(hull[hull.size() - 2], hull.back(), p);
      if ((upper && turn > -kCollinear) || (!upper && turn < kCollinear)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(p);
  }

  std::size_t start = 0;
  if (upper) {
    // Pareto part of the upper hull begins where Q peaks.
    double q_max = hull.front().second;
    for (const RatePoint& p : hull) q_max = std::max(q_max, p.second);
    while (start < hull.size() && hull[start].second < q_max - kCollinear) ++start;
  } else {
    // ...and of the lower hull where E bottoms out (last such point).
    double e_min = hull.front().second;
    for (const RatePoint& p : hull) e_min = std::min(e_min, p.second);
    for (std::size_t i = 0; i < hull.size(); ++i) {
      if (hull[i].second <= e_min + kCollinear) start = i;
    }
  }
  pts.assign(hull.begin() + static_cast<std::ptrdiff_t>(start), hull.end());
  std::sort(pts.begin(), pts.end(),
            [](const RatePoint& a, const RatePoint& b) { return a.mu < b.mu; });
  curve.convexified = true;
  return curve;
}

TradeoffCurve sample_curve(const ChannelFamily& family, CurveKind kind, int grid_size) {
  const CurveEvaluator eval(family);
  TradeoffCurve raw;
  raw.kind = kind;
  raw.family = family;
  raw.points = evaluate_grid(eval, kind, grid_size);
  return convexify(std::move(raw));
}

ScalarMaximum maximize_over_mu(const std::function<double(double)>& f, int grid_size) {
  const std::vector<double> grid = mu_grid(grid_size);
  std::vector<double> values(grid.size());
  const int n = static_cast<int>(grid.size());
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 8)
  for (int k = 0; k < n; ++k) values[k] = f(grid[k]);
  const std::size_t k_best =
      static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());
  ScalarMaximum best{grid[k_best], values[k_best]};
  const double lo = grid[k_best == 0 ? 0 : k_best - 1];
  const double hi = grid[std::min(k_best + 1, grid.size() - 1)];
  double refined_value = 0.0;
  const double refined_mu = golden_section(f, lo, hi, refined_value);
  if (refined_value > best.value) best = {refined_mu, refined_value};
  return best;
}

double ea_classical_capacity(const ChannelFamily& family, int grid_size) {
  const CurveEvaluator eval(family);
  return maximize_over_mu([&](double mu) { return eval.ce(mu).c; }, grid_size).value;
}

}  // namespace tradeoff
