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

// Dense complex linear algebra and entropy kernels. All entropies are in
// bits (log base 2).

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace tradeoff {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Probability entries in [-kProbabilityClamp, 0) are clamped to zero.
inline constexpr double kProbabilityClamp = 1e-12;
/// Normalization tolerance for probability vectors.
inline constexpr double kNormalization = 1e-10;
/// Hermiticity, trace and isometry tolerance for operators.
inline constexpr double kOperator = 1e-10;
/// Eigenvalues in [-kEigenvalueClamp, 0) are clamped to zero.
inline constexpr double kEigenvalueClamp = 1e-10;
}  // namespace tol

/// Neumaier-compensated accumulator. Used wherever long entropy series are
/// summed (large cloning orders, Unruh block series).
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  CompensatedSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// x log2 x with the convention 0 log 0 = 0.
inline double xlog2x(double x) noexcept {
  return x > 0.0 ? x * std::log2(x) : 0.0;
}

class ProbabilityVector {
 public:
  /// Validates and clamps. Throws InvalidDistributionError when an entry is
  /// below -1e-12 or the entries do not sum to one within 1e-10.
  explicit ProbabilityVector(std::vector<double> entries);

  static ProbabilityVector uniform(std::size_t n);

  std::span<const double> entries() const noexcept { return p_; }
  std::size_t size() const noexcept { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }

 private:
  std::vector<double> p_;
};

class DensityOperator {
 public:
  /// Validates Hermiticity, unit trace and positivity (all within 1e-10).
  /// Throws InvalidStateError on violation, ShapeError if not square.
  explicit DensityOperator(Matrix m);

  /// |psi><psi| for a unit vector (norm checked within 1e-10).
  static DensityOperator pure(const Vector& psi);
  static DensityOperator maximally_mixed(int dim);
  static DensityOperator diagonal(std::span<const double> probabilities);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }

 private:
  struct Unchecked {};
  DensityOperator(Matrix m, Unchecked) : m_(std::move(m)) {}
  friend DensityOperator partial_trace(const DensityOperator&,
                                       std::span<const int>,
                                       std::span<const int>);

  Matrix m_;
};

/// -mu log2 mu - (1-mu) log2 (1-mu). Throws DomainError outside [0,1].
double binary_entropy(double mu);

double shannon_entropy(const ProbabilityVector& p);

double von_neumann_entropy(const DensityOperator& rho);

/// Reduced state on the subsystems listed in `keep` (output ordered by
/// increasing subsystem index). Throws ShapeError when the dimensions do not
/// multiply to rho.dim() or `keep` is empty, repeated or out of range.
DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> dims,
                              std::span<const int> keep);

// ---------------------------------------------------------------------------
// Unvalidated kernels shared by the hot paths.

/// Maximum entry of |m - m^dagger|.
double hermiticity_defect(const Matrix& m);

/// Eigenvalues of a Hermitian matrix. Exactly diagonal inputs skip the
/// eigensolver. Throws InvalidStateError if the Hermiticity defect exceeds
/// 1e-10 (relative to max(1, max |m_ij|)).
RealVector hermitian_spectrum(const Matrix& m);

/// -sum l log2 l over a spectrum, clamping entries in [-1e-10, 0) to zero.
/// Throws InvalidStateError on more negative entries.
double spectrum_entropy(const RealVector& spectrum);

/// spectrum_entropy(hermitian_spectrum(m)).
double hermitian_entropy(const Matrix& m);

/// Reduced density matrix of the pure state `psi` on the kept subsystems,
/// computed as M M^dagger of the regrouped amplitude matrix.
Matrix reduce_pure(const Vector& psi, std::span<const int> dims,
                   std::span<const int> keep);

/// Kronecker product of two complex matrices.
Matrix kron(const Matrix& a, const Matrix& b);

}  // namespace tradeoff
