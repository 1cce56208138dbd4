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

#include "tradeoff/quantities.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "tradeoff/errors.hpp"

namespace tradeoff {

namespace {

// Above this joint A(x)B(x)E dimension the per-x reductions are taken from
// the channel and its complement instead of the full output vector.
constexpr long long kJointRouteCap = 512;

struct ConditionalEntropies {
  double h_b = 0.0;     // H(B) of the x-average
  double h_b_x = 0.0;   // H(B|X)
  double h_e_x = 0.0;   // H(E|X)
  double h_a_x = 0.0;   // H(A|X)
  double h_ab_x = 0.0;  // H(AB|X)
  double h_ae_x = 0.0;  // H(AE|X)
  double residual = 0.0;
};

// Spectrum of sum_i K_i sigma K_i^dagger. The output is accumulated in
// coordinate form; a diagonal result (the usual case for Schmidt-diagonal
// inputs through cloning blocks) skips the dense eigensolver.
RealVector sparse_output_spectrum(const SparseKraus& k, const Matrix& sigma) {
  std::unordered_map<long long, Complex> acc;
  const long long stride = k.dim_out();
  bool diagonal = true;
  for (const SparseKraus::Operator& op : k.operators()) {
    for (const SparseKraus::Entry& x : op) {
      for (const SparseKraus::Entry& y : op) {
        const Complex s = sigma(x.col, y.col);
        if (s == Complex(0.0, 0.0)) continue;
        acc[x.row * stride + y.row] += x.value * s * std::conj(y.value);
        if (x.row != y.row) diagonal = false;
      }
    }
  }
  if (diagonal) {
    RealVector d = RealVector::Zero(k.dim_out());
    for (const auto& [key, v] : acc) d[key / stride] = v.real();
    return d;
  }
  Matrix m = Matrix::Zero(k.dim_out(), k.dim_out());
  for (const auto& [key, v] : acc) m(key / stride, key % stride) = v;
  return hermitian_spectrum(m);
}

double entropy_of(const Matrix& m) { return hermitian_entropy(m); }

ConditionalEntropies joint_route(const Isometry& u, const PureStateEnsemble& ens) {
  const int da = ens.dim_a();
  const int din = ens.dim_in();
  const int db = u.dim_b();
  const int de = u.dim_e();
  const int in_dims[] = {da, din};
  const int out_dims[] = {da, db, de};
  const int keep_a[] = {0}, keep_in[] = {1};
  const int keep_b[] = {1}, keep_e[] = {2};
  const int keep_ab[] = {0, 1}, keep_ae[] = {0, 2}, keep_be[] = {1, 2};
  const Matrix ut = u.matrix().transpose();

  ConditionalEntropies out;
  CompensatedSum hb_x, he_x, ha_x, hab_x, hae_x;
  Matrix avg_b = Matrix::Zero(db, db);
  for (int x = 0; x < ens.size(); ++x) {
    const double p = ens.probs()[x];
    const Vector& psi = ens.states()[x];
    // Amplitudes psi(a, a') times U^T give (a, b*de + e) of (I (x) U) psi.
    const Matrix amp = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                                      Eigen::RowMajor>>(psi.data(), da, din);
    const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> phi_m =
        amp * ut;
    const Vector phi = Eigen::Map<const Vector>(phi_m.data(), phi_m.size());

    const double h_a = entropy_of(reduce_pure(psi, in_dims, keep_a));
    const double h_in = entropy_of(reduce_pure(psi, in_dims, keep_in));
    const Matrix rho_b = reduce_pure(phi, out_dims, keep_b);
    const double h_b = entropy_of(rho_b);
    const double h_e = entropy_of(reduce_pure(phi, out_dims, keep_e));
    const double h_ab = entropy_of(reduce_pure(phi, out_dims, keep_ab));
    const double h_ae = entropy_of(reduce_pure(phi, out_dims, keep_ae));
    const double h_be = entropy_of(reduce_pure(phi, out_dims, keep_be));

    out.residual = std::max({out.residual, std::abs(h_ab - h_e), std::abs(h_ae - h_b),
                             std::abs(h_be - h_a), std::abs(h_in - h_a)});
    hb_x += p * h_b;
    he_x += p * h_e;
    ha_x += p * h_a;
    hab_x += p * h_ab;
    hae_x += p * h_ae;
    avg_b += p * rho_b;
  }
  out.h_b = entropy_of(avg_b);
  out.h_b_x = hb_x.value();
  out.h_e_x = he_x.value();
  out.h_a_x = ha_x.value();
  out.h_ab_x = hab_x.value();
  out.h_ae_x = hae_x.value();
  return out;
}

ConditionalEntropies marginal_route(const SparseKraus& k, const SparseKraus& kc,
                                    const PureStateEnsemble& ens) {
  const int in_dims[] = {ens.dim_a(), ens.dim_in()};
  const int keep_a[] = {0}, keep_in[] = {1};
  ConditionalEntropies out;
  CompensatedSum hb_x, he_x, ha_x;
  Matrix avg_in = Matrix::Zero(ens.dim_in(), ens.dim_in());
  for (int x = 0; x < ens.size(); ++x) {
    const double p = ens.probs()[x];
    const Vector& psi = ens.states()[x];
    const Matrix sigma = reduce_pure(psi, in_dims, keep_in);
    const double h_a = entropy_of(reduce_pure(psi, in_dims, keep_a));
    out.residual = std::max(out.residual, std::abs(h_a - entropy_of(sigma)));
    hb_x += p * spectrum_entropy(sparse_output_spectrum(k, sigma));
    he_x += p * spectrum_entropy(sparse_output_spectrum(kc, sigma));
    ha_x += p * h_a;
    avg_in += p * sigma;
  }
  out.h_b = spectrum_entropy(sparse_output_spectrum(k, avg_in));
  out.h_b_x = hb_x.value();
  out.h_e_x = he_x.value();
  out.h_a_x = ha_x.value();
  // Conditional states on ABE are pure: H(AB|X) = H(E|X), H(AE|X) = H(B|X).
  out.h_ab_x = out.h_e_x;
  out.h_ae_x = out.h_b_x;
  return out;
}

CQQuantities assemble(const ConditionalEntropies& c) {
  CQQuantities q;
  q.H_B = c.h_b;
  q.H_B_given_X = c.h_b_x;
  q.H_E_given_X = c.h_e_x;
  q.H_A_given_X = c.h_a_x;
  q.I_X_B = c.h_b - c.h_b_x;
  q.I_coh = c.h_b_x - c.h_ab_x;
  q.I_AX_B = c.h_a_x + c.h_b - c.h_ab_x;
  q.I_A_B_given_X = c.h_a_x + c.h_b_x - c.h_ab_x;
  q.I_A_E_given_X = c.h_a_x + c.h_e_x - c.h_ae_x;
  q.identity_residual =
      std::max({c.residual, std::abs(c.h_ab_x - c.h_e_x), std::abs(c.h_ae_x - c.h_b_x)});
  return q;
}

void check_identities(const CQQuantities& q) {
  if (q.identity_residual > kIdentityTolerance) {
    throw ContractError("entropic identities violated by " +
                        std::to_string(q.identity_residual));
  }
}

void check_input(int channel_dim_in, const PureStateEnsemble& ens) {
  if (ens.dim_in() != channel_dim_in) {
    throw ShapeError("ensemble input dim " + std::to_string(ens.dim_in()) +
                     " does not match channel input dim " +
                     std::to_string(channel_dim_in));
  }
}

}  // namespace

PureStateEnsemble::PureStateEnsemble(ProbabilityVector probs, std::vector<Vector> states,
                                     int dim_a, int dim_in)
    : probs_(std::move(probs)), states_(std::move(states)), dim_a_(dim_a), dim_in_(dim_in) {
  if (dim_a <= 0 || dim_in <= 0) throw ShapeError("ensemble dimensions must be positive");
  if (probs_.size() != states_.size()) {
    throw ShapeError("ensemble has " + std::to_string(probs_.size()) +
                     " probabilities but " + std::to_string(states_.size()) + " states");
  }
  for (const Vector& s : states_) {
    if (s.size() != static_cast<Eigen::Index>(dim_a) * dim_in) {
      throw ShapeError("ensemble state has the wrong dimension");
    }
    if (std::abs(s.norm() - 1.0) > tol::kNormalization) {
      throw InvalidStateError("ensemble state is not normalized");
    }
  }
}

Matrix PureStateEnsemble::input_state(int x) const {
  const int dims[] = {dim_a_, dim_in_};
  const int keep[] = {1};
  return reduce_pure(states_.at(x), dims, keep);
}

PureStateEnsemble canonical_ensemble(double mu) {
  if (!(mu >= 0.0 && mu <= 0.5)) {
    throw DomainError("mu", "canonical ensemble parameter must lie in [0, 1/2], got " +
                                std::to_string(mu));
  }
  Vector psi0 = Vector::Zero(4), psi1 = Vector::Zero(4);
  psi0[0] = std::sqrt(mu);
  psi0[3] = std::sqrt(1.0 - mu);
  psi1[0] = std::sqrt(1.0 - mu);
  psi1[3] = std::sqrt(mu);
  return PureStateEnsemble(ProbabilityVector({0.5, 0.5}), {psi0, psi1}, 2, 2);
}

PureStateEnsemble canonical_ensemble(const ChannelFamily& family, double mu) {
  validate(family);
  return canonical_ensemble(mu);
}

CQQuantities cq_quantities(const KrausChannel& channel, const PureStateEnsemble& ensemble) {
  check_input(channel.dim_in(), ensemble);
  const long long joint =
      static_cast<long long>(ensemble.dim_a()) * channel.dim_out() * channel.size();
  CQQuantities q;
  if (joint <= kJointRouteCap) {
    q = assemble(joint_route(isometric_extension(channel), ensemble));
  } else {
    q = assemble(marginal_route(channel.sparse(), channel.sparse().complement(), ensemble));
  }
  check_identities(q);
  return q;
}

CQQuantities cq_quantities(const UnruhBlockWeights& unruh, const PureStateEnsemble& ensemble) {
  check_input(2, ensemble);
  // Block labels are copied to B and E, so every output entropy picks up
  // sum_l p_l (H_l - log2 p_l); the label term cancels in the differences.
  CompensatedSum hb, hb_x, he_x, hab_x, hae_x;
  double residual = 0.0;
  double h_a_x = 0.0;
  bool have_a = false;
  for (const UnruhBlock& block : unruh.blocks) {
    const int n = block.l - 1;
    const SparseKraus k = cloning_kraus(n);
    const long long joint = static_cast<long long>(ensemble.dim_a()) * (n + 1) * n;
    const ConditionalEntropies c =
        joint <= kJointRouteCap
            ? joint_route(isometric_extension(KrausChannel(k.to_dense())), ensemble)
            : marginal_route(k, k.complement(), ensemble);
    const double w = block.weight;
    const double label = -std::log2(w);
    hb += w * (c.h_b + label);
    hb_x += w * (c.h_b_x + label);
    he_x += w * (c.h_e_x + label);
    hab_x += w * (c.h_ab_x + label);
    hae_x += w * (c.h_ae_x + label);
    residual = std::max({residual, c.residual, std::abs(c.h_ab_x - c.h_e_x),
                         std::abs(c.h_ae_x - c.h_b_x)});
    if (!have_a) {
      h_a_x = c.h_a_x;
      have_a = true;
    }
  }
  ConditionalEntropies total;
  total.h_b = hb.value();
  total.h_b_x = hb_x.value();
  total.h_e_x = he_x.value();
  total.h_a_x = h_a_x;
  total.h_ab_x = hab_x.value();
  total.h_ae_x = hae_x.value();
  total.residual = residual;
  CQQuantities q = assemble(total);
  q.truncation_bound = unruh.residual * std::log2(unruh.max_l() + 1.0);
  check_identities(q);
  return q;
}

CQQuantities cq_quantities(const ChannelModel& channel, const PureStateEnsemble& ensemble) {
  return std::visit([&](const auto& c) { return cq_quantities(c, ensemble); }, channel);
}

}  // namespace tradeoff
