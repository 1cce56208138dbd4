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

// Classical-quantum ensembles and the entropic quantities of the state
// sum_x p(x) |x><x| (x) (I_A (x) U) phi_x (I_A (x) U)^dagger.

#include <variant>
#include <vector>

#include "tradeoff/channels.hpp"
#include "tradeoff/linalg.hpp"

namespace tradeoff {

/// {(p(x), |phi_x>)} with each |phi_x> a pure state on A (x) A'. The A' factor
/// is the channel input; A is the reference. Index order is a * dim_in + a'.
class PureStateEnsemble {
 public:
  /// Throws ShapeError if a state does not have dim_a * dim_in entries or
  /// the counts differ, InvalidStateError if a state is not normalized.
  PureStateEnsemble(ProbabilityVector probs, std::vector<Vector> states,
                    int dim_a, int dim_in);

  const ProbabilityVector& probs() const noexcept { return probs_; }
  const std::vector<Vector>& states() const noexcept { return states_; }
  int dim_a() const noexcept { return dim_a_; }
  int dim_in() const noexcept { return dim_in_; }
  int size() const noexcept { return static_cast<int>(states_.size()); }

  /// Reduced input state phi_x^{A'}.
  Matrix input_state(int x) const;

 private:
  ProbabilityVector probs_;
  std::vector<Vector> states_;
  int dim_a_;
  int dim_in_;
};

/// Equiprobable pair psi_0 = sqrt(mu)|00> + sqrt(1-mu)|11>,
/// psi_1 = sqrt(1-mu)|00> + sqrt(mu)|11> on a qubit A and qubit A'.
/// Throws DomainError("mu") outside [0, 1/2].
PureStateEnsemble canonical_ensemble(double mu);

/// Same, with `family` only used to check the input is a qubit (all three
/// families have qubit inputs).
PureStateEnsemble canonical_ensemble(const ChannelFamily& family, double mu);

struct CQQuantities {
  double H_B = 0.0;
  double H_B_given_X = 0.0;
  double H_E_given_X = 0.0;
  double H_A_given_X = 0.0;
  double I_X_B = 0.0;
  double I_coh = 0.0;           // I(A>BX)
  double I_AX_B = 0.0;
  double I_A_B_given_X = 0.0;
  double I_A_E_given_X = 0.0;

  /// Largest disagreement between redundant evaluations of the same entropy
  /// (H(AB)=H(E), H(A)=H(BE), H(AE)=H(B) per x, and the pure-state forms).
  double identity_residual = 0.0;
  /// Unruh only: residual * log2(L+1), a bound on the truncation error of
  /// each entropy. Zero otherwise.
  double truncation_bound = 0.0;
};

/// Agreement required of the redundant evaluations.
inline constexpr double kIdentityTolerance = 1e-9;

/// Generic route through the isometric extension. Throws ShapeError on a
/// dimension mismatch and ContractError if identity_residual exceeds 1e-9.
CQQuantities cq_quantities(const KrausChannel& channel,
                           const PureStateEnsemble& ensemble);

/// Blockwise route: each output is the direct sum of p_l-weighted block
/// outputs, whose spectra are merged without building the sum.
CQQuantities cq_quantities(const UnruhBlockWeights& unruh,
                           const PureStateEnsemble& ensemble);

CQQuantities cq_quantities(const ChannelModel& channel,
                           const PureStateEnsemble& ensemble);

}  // namespace tradeoff
