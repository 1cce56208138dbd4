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

// The three Hadamard channel families (qubit dephasing, 1->N cloning, Unruh)
// as Kraus/isometry objects, plus the channel, complement and degrading-map
// actions built on them.

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tradeoff/linalg.hpp"

namespace tradeoff {

/// N(s) = (1-p) s + p Delta(s).
struct Dephasing {
  double p = 0.0;
};

/// Universal 1->N qubit cloner on the (N+1)-dimensional symmetric subspace.
struct Cloning {
  int n = 1;
};

/// Weighted direct sum of 1->(l-1) cloning blocks, truncated once the block
/// weights account for all but `tail_tol` of the probability.
struct Unruh {
  double z = 0.0;
  double tail_tol = 1e-10;
};

using ChannelFamily = std::variant<Dephasing, Cloning, Unruh>;

/// Throws DomainError (naming p, n, z or tail_tol) if parameters are invalid.
void validate(const ChannelFamily& family);

/// "dephasing", "cloning" or "unruh".
std::string family_name(const ChannelFamily& family);

/// Kraus list in coordinate form. Cloning blocks have two nonzeros per
/// operator, so Unruh blocks of order several hundred stay cheap.
class SparseKraus {
 public:
  struct Entry {
    int row;
    int col;
    Complex value;
  };
  using Operator = std::vector<Entry>;

  SparseKraus(int dim_in, int dim_out, std::vector<Operator> ops);

  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  int size() const noexcept { return static_cast<int>(ops_.size()); }
  const std::vector<Operator>& operators() const noexcept { return ops_; }

  /// sum_i K_i sigma K_i^dagger in O(sum_i nnz_i^2).
  Matrix apply(const Matrix& sigma) const;

  /// Kraus list of the complementary channel, M_b(e, a) = K_e(b, a).
  SparseKraus complement() const;

  /// max |sum_i K_i^dagger K_i - I|.
  double completeness_defect() const;

  std::vector<Matrix> to_dense() const;

 private:
  int dim_in_;
  int dim_out_;
  std::vector<Operator> ops_;
};

/// Channel given by a Kraus list {K_i}, each dim_out x dim_in.
class KrausChannel {
 public:
  /// Throws ShapeError on inconsistent shapes and InvalidChannelError if
  /// sum K_i^dagger K_i deviates from the identity by more than 1e-10.
  explicit KrausChannel(std::vector<Matrix> kraus);

  const std::vector<Matrix>& operators() const noexcept { return kraus_; }
  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  int size() const noexcept { return static_cast<int>(kraus_.size()); }

  /// sum_i K_i sigma K_i^dagger, skipping zero Kraus entries.
  Matrix apply(const Matrix& sigma) const { return sparse_.apply(sigma); }

  const SparseKraus& sparse() const noexcept { return sparse_; }

 private:
  std::vector<Matrix> kraus_;
  SparseKraus sparse_;
  int dim_in_ = 0;
  int dim_out_ = 0;
};

/// U : A' -> B (x) E with U^dagger U = I. Row index is b * dim_e + e.
class Isometry {
 public:
  Isometry(Matrix u, int dim_b, int dim_e);

  const Matrix& matrix() const noexcept { return u_; }
  int dim_in() const noexcept { return static_cast<int>(u_.cols()); }
  int dim_b() const noexcept { return dim_b_; }
  int dim_e() const noexcept { return dim_e_; }

  /// (<b| (x) I_E) U, the dim_e x dim_in slice for a B vector.
  Matrix slice(const Vector& b) const;

 private:
  Matrix u_;
  int dim_b_;
  int dim_e_;
};

struct UnruhBlock {
  int l = 2;             // block label; the block is a 1->(l-1) cloner
  double weight = 0.0;   // p_l(z)
};

struct UnruhBlockWeights {
  double z = 0.0;
  double tail_tol = 0.0;
  std::vector<UnruhBlock> blocks;  // l = 2 .. L
  double residual = 0.0;           // 1 - sum of kept weights

  int max_l() const noexcept { return blocks.empty() ? 1 : blocks.back().l; }
};

KrausChannel dephasing_channel(double p);
KrausChannel cloning_channel(int n);

/// The n cloning Kraus operators
/// (1/sqrt(D_n)) (sqrt(n-i) |i><0| + sqrt(i+1) |i+1><1|), D_n = n(n+1)/2.
SparseKraus cloning_kraus(int n);

/// p_l(z) = (1-z)^3 z^(l-2) l(l-1)/2.
double unruh_block_weight(double z, int l);

/// Smallest prefix l = 2..L whose residual 1 - sum p_l is below tail_tol.
/// The residual is evaluated in closed form (negative-binomial tail), not by
/// subtraction.
UnruhBlockWeights unruh_block_weights(double z, double tail_tol);

/// Single-block families yield a KrausChannel; Unruh yields its block
/// weights (each block is cloning_channel(l - 1)).
using ChannelModel = std::variant<KrausChannel, UnruhBlockWeights>;
ChannelModel make_channel(const ChannelFamily& family);

/// U = sum_i K_i (x) |i>^E.
Isometry isometric_extension(const KrausChannel& channel);

/// Kraus list of N^c read off the isometry: M_b = (<b| (x) I_E) U.
KrausChannel complementary_channel(const KrausChannel& channel);

/// Kraus list {K_i (x) L_j} of the product channel.
KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b);

struct ChannelOutputs {
  DensityOperator b;
  DensityOperator e;
};

/// Conjugates sigma with the isometric extension and traces out E (for B)
/// or B (for E).
ChannelOutputs channel_and_complement(const KrausChannel& channel,
                                      const DensityOperator& sigma);

/// Measure-then-prepare degrading map of a Hadamard channel: a rank-one
/// POVM {w_k |b_k><b_k|} on B whose isometry slices are rank one, with the
/// prepared environment states xi_k read off those slices.
struct DegradingMap {
  std::vector<double> weights;
  std::vector<Vector> measurement;   // |b_k> on B
  std::vector<Vector> preparation;   // |xi_k> on E

  Matrix apply(const Matrix& rho_b) const;
};

/// Builds the degrading map for Dephasing (computational-basis measurement)
/// or Cloning (spin-coherent-state POVM). Throws UnsupportedFamilyError for
/// Unruh and InvalidChannelError if a slice is not rank one.
DegradingMap degrading_map(const ChannelFamily& family);

/// max over the test states of the trace-norm distance between D(N(s)) and
/// N^c(s).
double degrading_map_deviation(const ChannelFamily& family,
                               std::span<const DensityOperator> test_states);

}  // namespace tradeoff
