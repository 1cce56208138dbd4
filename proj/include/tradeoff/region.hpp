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

// The CQE capacity region: the CQ and CE curves lifted by inverse
// entanglement distribution and inverse super-dense coding, cut by the
// plane C + 2Q <= h.

#include <memory>

#include "tradeoff/curves.hpp"

namespace tradeoff {

struct RateTriple {
  double c = 0.0;  // bits
  double q = 0.0;  // qubits
  double e = 0.0;  // ebits consumed
};

struct CQERegion {
  ChannelFamily family;
  TradeoffCurve cq_curve;
  TradeoffCurve ce_curve;
  double h = 0.0;
  // Closed-form curves of the family. When set, a surface that rejects a
  // triple on the sampled chord is re-read from the exact curve, so points
  // between samples on a strictly concave stretch are not lost.
  std::shared_ptr<const CurveEvaluator> exact;
};

CQERegion build_region(const ChannelFamily& family, int grid_size = 512);

/// Signed slack of each bounding surface; a constraint holds when its slack
/// is >= -tol.
///   plane: h - (C + 2Q)
///   sdc:   C_CE(E + Q) - (C + 2Q), with C_CE read off the CE curve as a
///          function of E (held at its last value beyond the curve)
///   ed:    Q_CQ(C) - (Q - E) while C lies within the CQ curve's C range;
///          +infinity beyond it
/// A negative sdc or ed slack is replaced by the larger of the sampled and
/// exact-curve values when the region carries an evaluator.
struct ConstraintSlacks {
  double plane = 0.0;
  double sdc = 0.0;
  double ed = 0.0;
};

/// Throws DomainError("rate") if a coordinate is below -1e-12.
ConstraintSlacks constraint_slacks(const CQERegion& region, const RateTriple& t);

/// Closed-set membership: all three slacks >= -tol.
bool contains(const CQERegion& region, const RateTriple& t, double tol = 1e-9);

/// (I(X;B), I(A;B|X)/2, I(A;E|X)/2) of the canonical ensemble at mu.
RateTriple cef_corner(const ChannelFamily& family, double mu);

/// C as a function of E along a convexified CE curve (piecewise linear).
double ce_c_at_e(const TradeoffCurve& ce_curve, double e);

/// Q as a function of C along a convexified CQ curve (piecewise linear),
/// clamped to the endpoint values outside the curve's C range.
double cq_q_at_c(const TradeoffCurve& cq_curve, double c);

}  // namespace tradeoff
