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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "support.hpp"
#include "tradeoff/errors.hpp"
#include "tradeoff/oracle.hpp"
#include "tradeoff/quantities.hpp"

using namespace tradeoff;

namespace {

void check_identities(const CQQuantities& q) {
  CHECK(std::abs(q.I_X_B - (q.H_B - q.H_B_given_X)) < 1e-9);
  CHECK(std::abs(q.I_coh - (q.H_B_given_X - q.H_E_given_X)) < 1e-9);
  CHECK(std::abs(q.I_AX_B - (q.H_A_given_X + q.H_B - q.H_E_given_X)) < 1e-9);
  CHECK(q.identity_residual <= 1e-9);
  CHECK(q.I_X_B >= -1e-9);
  CHECK(q.I_AX_B >= -1e-9);
}

}  // namespace

TEST_CASE("canonical ensembles") {
  for (double mu : {0.0, 0.1, 0.25, 0.5}) {
    const PureStateEnsemble ens = canonical_ensemble(mu);
    CHECK(ens.size() == 2);
    CHECK(ens.probs()[0] == 0.5);
    const Matrix in0 = ens.input_state(0), in1 = ens.input_state(1);
    CHECK(std::abs(in0(0, 0).real() - mu) < 1e-15);
    CHECK(std::abs(in1(0, 0).real() - (1 - mu)) < 1e-15);
    const CQQuantities q = cq_quantities(dephasing_channel(0.4), ens);
    CHECK(std::abs(q.H_A_given_X - binary_entropy(mu)) < 1e-12);
  }
  CHECK(cq_quantities(dephasing_channel(0.4), canonical_ensemble(0.0)).H_A_given_X == 0.0);
  CHECK(std::abs(cq_quantities(dephasing_channel(0.4), canonical_ensemble(0.5)).H_A_given_X - 1.0) <
        1e-12);
  CHECK_THROWS_AS(canonical_ensemble(0.6), DomainError);
  CHECK_THROWS_AS(canonical_ensemble(-0.1), DomainError);
}

TEST_CASE("dephasing p=0.2 at mu=0.25") {
  const CQQuantities q = cq_quantities(dephasing_channel(0.2), canonical_ensemble(0.25));
  // Arbitrary-precision evaluation of the same entropies.
  CHECK(std::abs(q.I_X_B - 0.18872187554086714) < 1e-10);
  CHECK(std::abs(q.I_coh - 0.43499193199845169) < 1e-10);
  check_identities(q);
}

TEST_CASE("cloning N=2 at mu=1/2") {
  const CQQuantities q = cq_quantities(cloning_channel(2), canonical_ensemble(0.5));
  CHECK(std::abs(q.I_X_B) < 1e-12);
  CHECK(std::abs(q.I_coh - std::log2(1.5)) < 1e-12);
  check_identities(q);
}

TEST_CASE("one pure product state carries nothing") {
  Vector psi = Vector::Zero(4);
  psi[1] = 1.0;  // |0>_A |1>_A'
  const PureStateEnsemble ens(ProbabilityVector({1.0}), {psi}, 2, 2);
  for (const KrausChannel& ch : {dephasing_channel(0.3), cloning_channel(3)}) {
    const CQQuantities q = cq_quantities(ch, ens);
    CHECK(std::abs(q.I_X_B) < 1e-12);
    CHECK(std::abs(q.H_A_given_X) < 1e-12);
  }
}

TEST_CASE("property: entropic identities on random ensembles") {
  SearchOptions options;
  options.seed = 99;
  const std::vector<KrausChannel> channels{dephasing_channel(0.0), dephasing_channel(0.7),
                                           cloning_channel(2), cloning_channel(4)};
  for (const KrausChannel& ch : channels) {
    for (int i = 0; i < 60; ++i) {
      options.diagonal = (i % 3 == 0);
      check_identities(cq_quantities(ch, random_ensemble(2, options, i)));
    }
  }
  const KrausChannel pair = tensor_product(dephasing_channel(0.5), cloning_channel(2));
  for (int i = 0; i < 20; ++i) check_identities(cq_quantities(pair, random_ensemble(4, options, i)));
}

TEST_CASE("dephasing environment entropy from the determinant") {
  for (double p : {0.1, 0.5, 0.9}) {
    for (double mu : {0.05, 0.2, 0.4}) {
      const KrausChannel ch = dephasing_channel(p);
      const PureStateEnsemble ens = canonical_ensemble(mu);
      const Matrix env = complementary_channel(ch).apply(ens.input_state(0));
      const double det = (env(0, 0) * env(1, 1) - env(0, 1) * env(1, 0)).real();
      const double lambda_plus = 0.5 + std::sqrt(0.25 - det);
      const CQQuantities q = cq_quantities(ch, ens);
      CHECK(std::abs(q.H_E_given_X - binary_entropy(lambda_plus)) < 1e-9);
    }
  }
}

TEST_CASE("joint and marginal routes agree") {
  // N=24 exceeds the joint-route cap; the quantities must still match the
  // per-x outputs computed directly.
  const KrausChannel ch = cloning_channel(24);
  SearchOptions options;
  options.seed = 5;
  for (int i = 0; i < 5; ++i) {
    const PureStateEnsemble ens = random_ensemble(2, options, i);
    const CQQuantities q = cq_quantities(ch, ens);
    const KrausChannel comp = complementary_channel(ch);
    double hb_x = 0, he_x = 0;
    Matrix avg = Matrix::Zero(25, 25);
    for (int x = 0; x < ens.size(); ++x) {
      const Matrix b = ch.apply(ens.input_state(x));
      hb_x += ens.probs()[x] * hermitian_entropy(b);
      he_x += ens.probs()[x] * hermitian_entropy(comp.apply(ens.input_state(x)));
      avg += ens.probs()[x] * b;
    }
    CHECK(std::abs(q.H_B_given_X - hb_x) < 1e-10);
    CHECK(std::abs(q.H_E_given_X - he_x) < 1e-10);
    CHECK(std::abs(q.H_B - hermitian_entropy(avg)) < 1e-10);
    check_identities(q);
  }
}

TEST_CASE("Unruh at z=0 is the identity block") {
  const UnruhBlockWeights w = unruh_block_weights(0.0, 1e-12);
  for (double mu : {0.0, 0.2, 0.5}) {
    const CQQuantities u = cq_quantities(w, canonical_ensemble(mu));
    const CQQuantities c = cq_quantities(cloning_channel(1), canonical_ensemble(mu));
    CHECK(std::abs(u.I_X_B - c.I_X_B) < 1e-12);
    CHECK(std::abs(u.I_coh - c.I_coh) < 1e-12);
    CHECK(std::abs(u.I_AX_B - c.I_AX_B) < 1e-12);
    CHECK(u.truncation_bound == 0.0);
  }
}

TEST_CASE("Unruh quantities report a truncation bound") {
  const UnruhBlockWeights w = unruh_block_weights(0.5, 1e-10);
  const CQQuantities q = cq_quantities(w, canonical_ensemble(0.3));
  CHECK(q.truncation_bound > 0.0);
  CHECK(q.truncation_bound <= 1e-10 * std::log2(w.max_l() + 1.0) * (1 + 1e-12));
  check_identities(q);
}

TEST_CASE("shape errors") {
  const PureStateEnsemble two_qubit = random_ensemble(4, SearchOptions{}, 0);
  CHECK_THROWS_AS(cq_quantities(dephasing_channel(0.3), two_qubit), ShapeError);
  CHECK_THROWS_AS(cq_quantities(unruh_block_weights(0.3, 1e-8), two_qubit), ShapeError);
  CHECK_THROWS_AS(PureStateEnsemble(ProbabilityVector({1.0}), {Vector::Zero(3)}, 2, 2),
                  ShapeError);
  Vector v = Vector::Zero(4);
  v[0] = 2.0;
  CHECK_THROWS_AS(PureStateEnsemble(ProbabilityVector({1.0}), {v}, 2, 2), InvalidStateError);
}
