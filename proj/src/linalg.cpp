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

#include "tradeoff/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "tradeoff/errors.hpp"

namespace tradeoff {

namespace {

// Index bookkeeping for regrouping a multipartite index into (kept, traced).
struct Split {
  int kept_dim = 1;
  int traced_dim = 1;
  std::vector<int> full_index;  // [k * traced_dim + t] -> flat index

  int at(int k, int t) const { return full_index[k * traced_dim + t]; }
};

Split split_subsystems(int total, std::span<const int> dims,
                       std::span<const int> keep) {
  if (dims.empty() || keep.empty()) {
    throw ShapeError("partial trace needs non-empty dims and keep lists");
  }
  long long product = 1;
  for (int d : dims) {
    if (d <= 0) throw ShapeError("subsystem dimensions must be positive");
    product *= d;
  }
  if (product != total) {
    throw ShapeError("subsystem dimensions multiply to " +
                     std::to_string(product) + " but the operator has dim " +
                     std::to_string(total));
  }
  const int n = static_cast<int>(dims.size());
  std::vector<bool> kept(n, false);
  for (int k : keep) {
    if (k < 0 || k >= n) throw ShapeError("kept subsystem index out of range");
    if (kept[k]) throw ShapeError("kept subsystem index repeated");
    kept[k] = true;
  }

  Split s;
  std::vector<int> kept_list, traced_list;
  for (int i = 0; i < n; ++i) {
    (kept[i] ? kept_list : traced_list).push_back(i);
    (kept[i] ? s.kept_dim : s.traced_dim) *= dims[i];
  }

  // Row-major strides: subsystem 0 is the most significant digit.
  std::vector<int> stride(n, 1);
  for (int i = n - 2; i >= 0; --i) stride[i] = stride[i + 1] * dims[i + 1];

  auto digits_to_offset = [&](int value, const std::vector<int>& which) {
    int offset = 0;
    for (int j = static_cast<int>(which.size()) - 1; j >= 0; --j) {
      const int sub = which[j];
      offset += (value % dims[sub]) * stride[sub];
      value /= dims[sub];
    }
    return offset;
  };

  s.full_index.resize(static_cast<std::size_t>(s.kept_dim) * s.traced_dim);
  for (int k = 0; k < s.kept_dim; ++k) {
    const int ko = digits_to_offset(k, kept_list);
    for (int t = 0; t < s.traced_dim; ++t) {
      s.full_index[k * s.traced_dim + t] = ko + digits_to_offset(t, traced_list);
    }
  }
  return s;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> entries)
    : p_(std::move(entries)) {
  if (p_.empty()) throw InvalidDistributionError("empty probability vector");
  CompensatedSum total;
  for (double& x : p_) {
    if (!(x >= -tol::kProbabilityClamp)) {
      throw InvalidDistributionError("negative probability " +
                                     std::to_string(x));
    }
    if (x < 0.0) x = 0.0;
    total += x;
  }
  if (std::abs(total.value() - 1.0) > tol::kNormalization) {
    throw InvalidDistributionError("probabilities sum to " +
                                   std::to_string(total.value()));
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t n) {
  return ProbabilityVector(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

DensityOperator::DensityOperator(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw ShapeError("density operator must be a non-empty square matrix");
  }
  if (hermiticity_defect(m_) > tol::kOperator) {
    throw InvalidStateError("density operator is not Hermitian");
  }
  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > tol::kOperator) {
    throw InvalidStateError("density operator has trace " +
                            std::to_string(trace));
  }
  const RealVector ev = hermitian_spectrum(m_);
  if (ev.minCoeff() < -tol::kEigenvalueClamp) {
    throw InvalidStateError("density operator has a negative eigenvalue");
  }
}

DensityOperator DensityOperator::pure(const Vector& psi) {
  if (std::abs(psi.norm() - 1.0) > tol::kOperator) {
    throw InvalidStateError("pure state vector is not normalized");
  }
  return DensityOperator(psi * psi.adjoint(), Unchecked{});
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
  if (dim <= 0) throw ShapeError("dimension must be positive");
  return DensityOperator(Matrix::Identity(dim, dim) / static_cast<double>(dim),
                         Unchecked{});
}

DensityOperator DensityOperator::diagonal(std::span<const double> probabilities) {
  const ProbabilityVector p(
      std::vector<double>(probabilities.begin(), probabilities.end()));
  const int d = static_cast<int>(p.size());
  Matrix m = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = p[i];
  return DensityOperator(std::move(m), Unchecked{});
}

double binary_entropy(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw DomainError("mu", "binary entropy argument must lie in [0, 1], got " +
                                std::to_string(mu));
  }
  return -xlog2x(mu) - xlog2x(1.0 - mu);
}

double shannon_entropy(const ProbabilityVector& p) {
  CompensatedSum h;
  for (double x : p.entries()) h += -xlog2x(x);
  return h.value();
}

double von_neumann_entropy(const DensityOperator& rho) {
  return hermitian_entropy(rho.matrix());
}

DensityOperator partial_trace(const DensityOperator& rho,
                              std::span<const int> dims,
                              std::span<const int> keep) {
  const Split s = split_subsystems(rho.dim(), dims, keep);
  const Matrix& m = rho.matrix();
  Matrix out = Matrix::Zero(s.kept_dim, s.kept_dim);
  for (int k1 = 0; k1 < s.kept_dim; ++k1) {
    for (int k2 = 0; k2 < s.kept_dim; ++k2) {
      Complex acc = 0.0;
      for (int t = 0; t < s.traced_dim; ++t) acc += m(s.at(k1, t), s.at(k2, t));
      out(k1, k2) = acc;
    }
  }
  return DensityOperator(std::move(out), DensityOperator::Unchecked{});
}

double hermiticity_defect(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

RealVector hermitian_spectrum(const Matrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("spectrum of a non-square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m) > tol::kOperator * scale) {
    throw InvalidStateError("matrix is not Hermitian within tolerance");
  }
  const Eigen::Index n = m.rows();
  bool is_diagonal = true;
  for (Eigen::Index j = 0; j < n && is_diagonal; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i != j && m(i, j) != Complex(0.0, 0.0)) {
        is_diagonal = false;
        break;
      }
    }
  }
  if (is_diagonal) return m.diagonal().real();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

double spectrum_entropy(const RealVector& spectrum) {
  CompensatedSum h;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double l = spectrum[i];
    if (l < -tol::kEigenvalueClamp) {
      throw InvalidStateError("eigenvalue " + std::to_string(l) +
                              " below the clamping window");
    }
    h += -xlog2x(l);
  }
  return h.value();
}

double hermitian_entropy(const Matrix& m) {
  return spectrum_entropy(hermitian_spectrum(m));
}

Matrix reduce_pure(const Vector& psi, std::span<const int> dims,
                   std::span<const int> keep) {
  const Split s = split_subsystems(static_cast<int>(psi.size()), dims, keep);
  Matrix amp(s.kept_dim, s.traced_dim);
  for (int k = 0; k < s.kept_dim; ++k) {
    for (int t = 0; t < s.traced_dim; ++t) amp(k, t) = psi[s.at(k, t)];
  }
  return amp * amp.adjoint();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace tradeoff
