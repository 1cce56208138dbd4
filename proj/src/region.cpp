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

#include "tradeoff/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tradeoff/errors.hpp"
#include "tradeoff/quantities.hpp"

namespace tradeoff {

namespace {

void require_convex(const TradeoffCurve& curve, CurveKind kind) {
  if (!curve.convexified || curve.kind != kind || curve.points.empty()) {
    throw ContractError(std::string("expected a convexified ") + kind_name(kind) + " curve");
  }
}

// (x, y, mu) samples of a curve, sorted by x.
struct Sample {
  double x, y, mu;
};

// Bracketing pair for x; lo == hi outside the sampled range.
struct Bracket {
  std::size_t lo = 0, hi = 0;
  double value = 0.0;
};

Bracket locate(const std::vector<Sample>& xy, double x) {
  const std::size_t last = xy.size() - 1;
  if (x <= xy.front().x) return {0, 0, xy.front().y};
  if (x >= xy.back().x) return {last, last, xy.back().y};
  const auto it = std::upper_bound(xy.begin(), xy.end(), x,
                                   [](double v, const Sample& p) { return v < p.x; });
  const std::size_t hi = static_cast<std::size_t>(it - xy.begin()), lo = hi - 1;
  const double span = xy[hi].x - xy[lo].x;
  if (span <= 0.0) return {lo, hi, std::max(xy[lo].y, xy[hi].y)};
  const double t = (x - xy[lo].x) / span;
  return {lo, hi, xy[lo].y + t * (xy[hi].y - xy[lo].y)};
}

std::vector<Sample> ce_samples(const TradeoffCurve& ce_curve) {
  require_convex(ce_curve, CurveKind::CE);
  // Increasing mu raises both E and C along the convexified CE curve.
  std::vector<Sample> xy;
  xy.reserve(ce_curve.points.size());
  for (const RatePoint& p : ce_curve.points) xy.push_back({p.second, p.c, p.mu});
  return xy;
}

std::vector<Sample> cq_samples(const TradeoffCurve& cq_curve) {
  require_convex(cq_curve, CurveKind::CQ);
  std::vector<Sample> xy;
  xy.reserve(cq_curve.points.size());
  for (auto it = cq_curve.points.rbegin(); it != cq_curve.points.rend(); ++it) {
    xy.push_back({it->c, it->second, it->mu});
  }
  return xy;
}

// Solves g(mu) = target on [a, b] for g monotone, by regula falsi with the
// Illinois modification. ga and gb are g(a) and g(b).
template <class G>
double solve_mu(const G& g, double target, double a, double b, double ga, double gb) {
  double fa = ga - target, fb = gb - target;
  int side = 0;
  for (int it = 0; it < 100 && std::abs(b - a) > 1e-15; ++it) {
    const double m = fb == fa ? 0.5 * (a + b) : b - fb * (b - a) / (fb - fa);
    const double fm = g(m) - target;
    if (fm == 0.0) return m;
    if ((fm > 0) == (fb > 0)) {
      b = m;
      fb = fm;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = m;
      fa = fm;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (std::abs(fm) < 1e-14) return m;
  }
  return 0.5 * (a + b);
}

// C on the exact CE curve at E = e, between the samples of bracket b.
double exact_ce_c(const CurveEvaluator& eval, const std::vector<Sample>& xy, const Bracket& b,
                  double e) {
  const auto entropy = [](double mu) { return binary_entropy(mu); };
  const double mu = solve_mu(entropy, e, xy[b.lo].mu, xy[b.hi].mu, xy[b.lo].x, xy[b.hi].x);
  return eval.ce(mu).c;
}

// Q on the exact CQ curve at C = c, between the samples of bracket b.
double exact_cq_q(const CurveEvaluator& eval, const std::vector<Sample>& xy, const Bracket& b,
                  double c) {
  const auto rate = [&eval](double mu) { return eval.cq(mu).c; };
  const double mu = solve_mu(rate, c, xy[b.lo].mu, xy[b.hi].mu, xy[b.lo].x, xy[b.hi].x);
  return eval.cq(mu).second;
}

}  // namespace

CQERegion build_region(const ChannelFamily& family, int grid_size) {
  CQERegion r;
  r.family = family;
  r.cq_curve = sample_curve(family, CurveKind::CQ, grid_size);
  r.ce_curve = sample_curve(family, CurveKind::CE, grid_size);
  r.h = ea_classical_capacity(family, grid_size);
  r.exact = std::make_shared<const CurveEvaluator>(family);
  return r;
}

double ce_c_at_e(const TradeoffCurve& ce_curve, double e) {
  return locate(ce_samples(ce_curve), e).value;
}

double cq_q_at_c(const TradeoffCurve& cq_curve, double c) {
  return locate(cq_samples(cq_curve), c).value;
}

ConstraintSlacks constraint_slacks(const CQERegion& region, const RateTriple& t) {
  constexpr double kFloor = -1e-12;
  if (!(t.c >= kFloor && t.q >= kFloor && t.e >= kFloor)) {
    throw DomainError("rate", "rate triple coordinates must be non-negative");
  }
  ConstraintSlacks s;
  s.plane = region.h - (t.c + 2.0 * t.q);

  const std::vector<Sample> ce = ce_samples(region.ce_curve);
  const Bracket bce = locate(ce, t.e + t.q);
  s.sdc = bce.value - (t.c + 2.0 * t.q);
  if (s.sdc < 0.0 && region.exact && bce.lo != bce.hi) {
    s.sdc = std::max(s.sdc, exact_ce_c(*region.exact, ce, bce, t.e + t.q) - (t.c + 2.0 * t.q));
  }

  const std::vector<Sample> cq = cq_samples(region.cq_curve);
  // Past the CQ curve's classical capacity surface (c) imposes nothing; the
  // slack window keeps corners computed at that endpoint on the curve.
  if (t.c > cq.back().x - kFloor) {
    s.ed = std::numeric_limits<double>::infinity();
    return s;
  }
  const Bracket bcq = locate(cq, t.c);
  s.ed = bcq.value - (t.q - t.e);
  if (s.ed < 0.0 && region.exact && bcq.lo != bcq.hi) {
    s.ed = std::max(s.ed, exact_cq_q(*region.exact, cq, bcq, t.c) - (t.q - t.e));
  }
  return s;
}

bool contains(const CQERegion& region, const RateTriple& t, double tol) {
  const ConstraintSlacks s = constraint_slacks(region, t);
  return s.plane >= -tol && s.sdc >= -tol && s.ed >= -tol;
}

RateTriple cef_corner(const ChannelFamily& family, double mu) {
  const CQQuantities q = cq_quantities(make_channel(family), canonical_ensemble(family, mu));
  return {q.I_X_B, 0.5 * q.I_A_B_given_X, 0.5 * q.I_A_E_given_X};
}

}  // namespace tradeoff
