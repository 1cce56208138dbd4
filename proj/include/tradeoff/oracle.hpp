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

// Brute-force check of the closed-form optima: random ensembles pushed
// through the generic channel and entropy machinery must never beat them.

#include <cstdint>
#include <string>
#include <vector>

#include "tradeoff/curves.hpp"
#include "tradeoff/quantities.hpp"

namespace tradeoff {

/// CQ: I(X;B) + lambda I(A>BX), lambda >= 1.
/// CE: I(AX;B) - lambda H(A|X), 0 <= lambda <= 1.
/// Throws DomainError("lambda") outside the kind's range.
double objective(CurveKind kind, double lambda, const CQQuantities& q);

void check_lambda(CurveKind kind, double lambda);

struct ClosedFormOptimum {
  double value = 0.0;
  double mu = 0.0;
};

/// max over mu of the objective on the closed-form rate pair (C + lambda Q
/// for CQ, C - lambda E for CE), grid then golden-section refinement.
ClosedFormOptimum closed_form_optimum(const ChannelFamily& family, CurveKind kind,
                                      double lambda, int grid_size = 512);

struct SearchOptions {
  int n_samples = 20000;
  std::uint64_t seed = 7;
  int ensemble_size = 6;  // upper bound on |X|; sizes are drawn in [2, cap]
  bool diagonal = false;  // restrict to Schmidt-diagonal conditional states
};

struct VerificationReport {
  std::string family;       // "dephasing", "cloning", "unruh", or "a (x) b"
  std::vector<std::pair<std::string, double>> params;
  double lambda = 0.0;
  CurveKind kind = CurveKind::CQ;
  int n_samples = 0;        // random ensembles, excluding injected ones
  int n_injected = 0;
  int ensemble_size = 0;    // the cap in force
  bool diagonal = false;
  double best_sampled = 0.0;
  double closed_form = 0.0;
  double closed_form_mu = 0.0;  // argmax (single channel only)
  double max_violation = 0.0;
  std::uint64_t seed = 0;

  static constexpr double kViolationTolerance = 1e-9;
  bool passed() const noexcept { return max_violation <= kViolationTolerance; }
};

/// Number of canonical ensembles at mu = i/64, i = 0..32, placed at the
/// head of every sample stream (followed by the closed-form argmax).
inline constexpr int kCanonicalInjections = 33;

/// Throws UnsupportedFamilyError for Unruh, DomainError for lambda or
/// ensemble_size outside [2, 6] or a negative sample count.
VerificationReport random_ensemble_search(const ChannelFamily& family, CurveKind kind,
                                          double lambda, const SearchOptions& options);

/// Same stream evaluated for several lambdas at once; element i equals
/// random_ensemble_search(family, kind, lambdas[i], options).
std::vector<VerificationReport> random_ensemble_search(const ChannelFamily& family,
                                                       CurveKind kind,
                                                       const std::vector<double>& lambdas,
                                                       const SearchOptions& options);

/// Random ensembles on the joint input of first (x) second, compared with
/// the sum of the two single-channel closed-form optima. Throws
/// DomainError("dimension") when the combined output dimension exceeds 8,
/// UnsupportedFamilyError for Unruh.
VerificationReport two_letter_check(const ChannelFamily& first, const ChannelFamily& second,
                                    CurveKind kind, double lambda,
                                    const SearchOptions& options);

// ---------------------------------------------------------------------------
// Sample stream, shared with the serial reference.

/// Engine for sample `index` of the stream seeded by `seed`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

/// Random ensemble on A (x) A' with dim_a = dim_in: Dirichlet(1)
/// probabilities and Haar-random joint pure states (or Schmidt-diagonal ones
/// with Dirichlet spectra when `diagonal`).
PureStateEnsemble random_ensemble(int dim_in, const SearchOptions& options,
                                  std::uint64_t index);

/// Channel plus the ensembles it is probed with: the injected ensembles
/// first, then options.n_samples random ones.
struct SampleStream {
  KrausChannel channel;
  int dim_in = 0;
  std::vector<PureStateEnsemble> injected;  // stream head
  SearchOptions options;

  int total() const noexcept {
    return static_cast<int>(injected.size()) + options.n_samples;
  }
  PureStateEnsemble ensemble(int index) const;
};

/// Objective value of every stream entry for each lambda, out[l][i].
/// Parallel across entries; results do not depend on the team size.
std::vector<std::vector<double>> evaluate_stream(const SampleStream& stream, CurveKind kind,
                                                 const std::vector<double>& lambdas);

}  // namespace tradeoff
