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

#include "tradeoff/channels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "tradeoff/errors.hpp"

namespace tradeoff {

namespace {

SparseKraus sparse_from_dense(const std::vector<Matrix>& kraus) {
  if (kraus.empty()) throw ShapeError("Kraus list is empty");
  const int rows = static_cast<int>(kraus.front().rows());
  const int cols = static_cast<int>(kraus.front().cols());
  std::vector<SparseKraus::Operator> ops;
  ops.reserve(kraus.size());
  for (const Matrix& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) {
      throw ShapeError("Kraus operators have inconsistent shapes");
    }
    SparseKraus::Operator op;
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < rows; ++r) {
        if (k(r, c) != Complex(0.0, 0.0)) op.push_back({r, c, k(r, c)});
      }
    }
    ops.push_back(std::move(op));
  }
  return SparseKraus(cols, rows, std::move(ops));
}

std::string to_string_exact(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration.
void gauss_legendre(int m, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  nodes.assign(m, 0.0);
  weights.assign(m, 0.0);
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (m == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = m * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= m; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = m * (x * p1 - p0) / (x * x - 1.0);
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

double binomial(int n, int k) {
  return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) -
                  std::lgamma(n - k + 1.0));
}

// |psi>^{(x) n} in the symmetric basis {|n-j, j>}, psi = cos(t/2)|0> +
// e^{i phi} sin(t/2)|1>.
Vector spin_coherent_state(int n, double cos_theta, double phi) {
  const double c = std::sqrt(std::max(0.0, (1.0 + cos_theta) / 2.0));
  const double s = std::sqrt(std::max(0.0, (1.0 - cos_theta) / 2.0));
  Vector v(n + 1);
  for (int j = 0; j <= n; ++j) {
    v[j] = std::sqrt(binomial(n, j)) * std::pow(c, n - j) * std::pow(s, j) *
           std::polar(1.0, j * phi);
  }
  return v;
}

double trace_norm(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace

void validate(const ChannelFamily& family) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Dephasing>) {
          if (!(f.p >= 0.0 && f.p <= 1.0)) {
            throw DomainError("p", "dephasing parameter must lie in [0, 1], got " +
                                       to_string_exact(f.p));
          }
        } else if constexpr (std::is_same_v<T, Cloning>) {
          if (f.n < 1) {
            throw DomainError("n", "number of clones must be a positive integer, got " +
                                       std::to_string(f.n));
          }
        } else {
          if (!(f.z >= 0.0 && f.z < 1.0)) {
            throw DomainError("z", "acceleration parameter must lie in [0, 1), got " +
                                       to_string_exact(f.z));
          }
          if (!(f.tail_tol > 0.0 && f.tail_tol < 1.0)) {
            throw DomainError("tail_tol", "tail tolerance must lie in (0, 1), got " +
                                              to_string_exact(f.tail_tol));
          }
        }
      },
      family);
}

std::string family_name(const ChannelFamily& family) {
  switch (family.index()) {
    case 0: return "dephasing";
    case 1: return "cloning";
    default: return "unruh";
  }
}

// --- SparseKraus ------------------------------------------------------------

SparseKraus::SparseKraus(int dim_in, int dim_out, std::vector<Operator> ops)
    : dim_in_(dim_in), dim_out_(dim_out), ops_(std::move(ops)) {
  if (dim_in <= 0 || dim_out <= 0) throw ShapeError("channel dimensions must be positive");
  if (ops_.empty()) throw ShapeError("Kraus list is empty");
  for (const Operator& op : ops_) {
    for (const Entry& e : op) {
      if (e.row < 0 || e.row >= dim_out || e.col < 0 || e.col >= dim_in) {
        throw ShapeError("Kraus entry outside the operator shape");
      }
    }
  }
}

Matrix SparseKraus::apply(const Matrix& sigma) const {
  if (sigma.rows() != dim_in_ || sigma.cols() != dim_in_) {
    throw ShapeError("input state has dim " + std::to_string(sigma.rows()) +
                     ", channel expects " + std::to_string(dim_in_));
  }
  Matrix out = Matrix::Zero(dim_out_, dim_out_);
  for (const Operator& op : ops_) {
    for (const Entry& x : op) {
      for (const Entry& y : op) {
        out(x.row, y.row) += x.value * sigma(x.col, y.col) * std::conj(y.value);
      }
    }
  }
  return out;
}

SparseKraus SparseKraus::complement() const {
  std::vector<Operator> comp(dim_out_);
  for (int e = 0; e < size(); ++e) {
    for (const Entry& x : ops_[e]) comp[x.row].push_back({e, x.col, x.value});
  }
  return SparseKraus(dim_in_, size(), std::move(comp));
}

double SparseKraus::completeness_defect() const {
  Matrix acc = Matrix::Zero(dim_in_, dim_in_);
  for (const Operator& op : ops_) {
    for (const Entry& x : op) {
      for (const Entry& y : op) {
        if (x.row == y.row) acc(x.col, y.col) += std::conj(x.value) * y.value;
      }
    }
  }
  return (acc - Matrix::Identity(dim_in_, dim_in_)).cwiseAbs().maxCoeff();
}

std::vector<Matrix> SparseKraus::to_dense() const {
  std::vector<Matrix> dense;
  dense.reserve(ops_.size());
  for (const Operator& op : ops_) {
    Matrix k = Matrix::Zero(dim_out_, dim_in_);
    for (const Entry& x : op) k(x.row, x.col) += x.value;
    dense.push_back(std::move(k));
  }
  return dense;
}

// --- KrausChannel / Isometry -------------------------------------------------

KrausChannel::KrausChannel(std::vector<Matrix> kraus)
    : kraus_(std::move(kraus)), sparse_(sparse_from_dense(kraus_)) {
  dim_in_ = sparse_.dim_in();
  dim_out_ = sparse_.dim_out();
  const double defect = sparse_.completeness_defect();
  if (defect > tol::kOperator) {
    throw InvalidChannelError("Kraus operators are not complete (defect " +
                              to_string_exact(defect) + ")");
  }
}

Isometry::Isometry(Matrix u, int dim_b, int dim_e)
    : u_(std::move(u)), dim_b_(dim_b), dim_e_(dim_e) {
  if (u_.rows() != static_cast<Eigen::Index>(dim_b) * dim_e) {
    throw ShapeError("isometry row count does not match dim_b * dim_e");
  }
  const Eigen::Index n = u_.cols();
  const double defect =
      (u_.adjoint() * u_ - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > tol::kOperator) {
    throw InvalidChannelError("U^dagger U deviates from the identity by " +
                              to_string_exact(defect));
  }
}

Matrix Isometry::slice(const Vector& b) const {
  if (b.size() != dim_b_) throw ShapeError("slice vector has wrong dimension");
  Matrix s = Matrix::Zero(dim_e_, u_.cols());
  for (int j = 0; j < dim_b_; ++j) {
    if (b[j] == Complex(0.0, 0.0)) continue;
    s += std::conj(b[j]) * u_.middleRows(static_cast<Eigen::Index>(j) * dim_e_, dim_e_);
  }
  return s;
}

// --- Families ----------------------------------------------------------------

KrausChannel dephasing_channel(double p) {
  validate(Dephasing{p});
  const Matrix id = Matrix::Identity(2, 2);
  if (p == 0.0) return KrausChannel({id});
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return KrausChannel({std::sqrt(1.0 - p / 2.0) * id, std::sqrt(p / 2.0) * z});
}

SparseKraus cloning_kraus(int n) {
  validate(Cloning{n});
  const double delta = n * (n + 1.0) / 2.0;
  const double norm = 1.0 / std::sqrt(delta);
  std::vector<SparseKraus::Operator> ops(n);
  for (int i = 0; i < n; ++i) {
    ops[i] = {{i, 0, Complex(norm * std::sqrt(static_cast<double>(n - i)), 0.0)},
              {i + 1, 1, Complex(norm * std::sqrt(i + 1.0), 0.0)}};
  }
  return SparseKraus(2, n + 1, std::move(ops));
}

KrausChannel cloning_channel(int n) { return KrausChannel(cloning_kraus(n).to_dense()); }

double unruh_block_weight(double z, int l) {
  const double one_minus = 1.0 - z;
  return one_minus * one_minus * one_minus * std::pow(z, l - 2) *
         (l - 1.0) * l / 2.0;
}

UnruhBlockWeights unruh_block_weights(double z, double tail_tol) {
  validate(Unruh{z, tail_tol});
  UnruhBlockWeights w;
  w.z = z;
  w.tail_tol = tail_tol;
  // With k = l - 2 the weights are the negative-binomial law of the number of
  // failures before the third success (success probability 1 - z). Keeping
  // k <= K - 1 leaves P(fewer than 3 successes in K + 2 trials).
  auto residual_after = [z](int last_l) {
    const int trials = last_l + 1;
    const double q = 1.0 - z;
    double tail = 0.0;
    for (int j = 0; j <= 2; ++j) {
      tail += binomial(trials, j) * std::pow(q, j) * std::pow(z, trials - j);
    }
    return tail;
  };
  for (int l = 2;; ++l) {
    const double weight = unruh_block_weight(z, l);
    if (weight > 0.0) w.blocks.push_back({l, weight});
    w.residual = residual_after(l);
    if (w.residual < tail_tol) break;
  }
  return w;
}

ChannelModel make_channel(const ChannelFamily& family) {
  validate(family);
  return std::visit(
      [](const auto& f) -> ChannelModel {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Dephasing>) {
          return dephasing_channel(f.p);
        } else if constexpr (std::is_same_v<T, Cloning>) {
          return cloning_channel(f.n);
        } else {
          return unruh_block_weights(f.z, f.tail_tol);
        }
      },
      family);
}

Isometry isometric_extension(const KrausChannel& channel) {
  const int db = channel.dim_out();
  const int de = channel.size();
  Matrix u = Matrix::Zero(static_cast<Eigen::Index>(db) * de, channel.dim_in());
  for (int i = 0; i < de; ++i) {
    const Matrix& k = channel.operators()[i];
    for (int b = 0; b < db; ++b) u.row(static_cast<Eigen::Index>(b) * de + i) = k.row(b);
  }
  return Isometry(std::move(u), db, de);
}

KrausChannel complementary_channel(const KrausChannel& channel) {
  return KrausChannel(channel.sparse().complement().to_dense());
}

KrausChannel tensor_product(const KrausChannel& a, const KrausChannel& b) {
  std::vector<Matrix> ops;
  ops.reserve(static_cast<std::size_t>(a.size()) * b.size());
  for (const Matrix& ka : a.operators()) {
    for (const Matrix& kb : b.operators()) ops.push_back(kron(ka, kb));
  }
  return KrausChannel(std::move(ops));
}

ChannelOutputs channel_and_complement(const KrausChannel& channel,
                                      const DensityOperator& sigma) {
  if (sigma.dim() != channel.dim_in()) {
    throw ShapeError("input state has dim " + std::to_string(sigma.dim()) +
                     ", channel expects " + std::to_string(channel.dim_in()));
  }
  const Isometry u = isometric_extension(channel);
  const DensityOperator joint(u.matrix() * sigma.matrix() * u.matrix().adjoint());
  const int dims[] = {u.dim_b(), u.dim_e()};
  const int keep_b[] = {0};
  const int keep_e[] = {1};
  return {partial_trace(joint, dims, keep_b), partial_trace(joint, dims, keep_e)};
}

// --- Degrading map -------------------------------------------------------------

Matrix DegradingMap::apply(const Matrix& rho_b) const {
  const Eigen::Index de = preparation.empty() ? 0 : preparation.front().size();
  Matrix out = Matrix::Zero(de, de);
  for (std::size_t k = 0; k < weights.size(); ++k) {
    const Complex outcome =
        weights[k] * (measurement[k].adjoint() * rho_b * measurement[k])(0, 0);
    out += outcome.real() * preparation[k] * preparation[k].adjoint();
  }
  return out;
}

DegradingMap degrading_map(const ChannelFamily& family) {
  validate(family);
  if (std::holds_alternative<Unruh>(family)) {
    throw UnsupportedFamilyError(
        "degrading map is built per single-block family (dephasing, cloning)");
  }
  const KrausChannel channel = std::get<KrausChannel>(make_channel(family));
  const Isometry u = isometric_extension(channel);
  const int db = u.dim_b();

  DegradingMap map;
  if (std::holds_alternative<Dephasing>(family)) {
    for (int j = 0; j < db; ++j) {
      map.weights.push_back(1.0);
      map.measurement.push_back(Vector::Unit(db, j));
    }
  } else {
    // Spherical n-design: Gauss-Legendre in cos(theta), n+1 equally spaced
    // azimuths. (n+1) int |psi><psi|^{(x)n} dOmega/4pi = identity on Sym^n.
    const int n = std::get<Cloning>(family).n;
    std::vector<double> nodes, gl_weights;
    gauss_legendre(n / 2 + 1, nodes, gl_weights);
    const int azimuths = n + 1;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (int m = 0; m < azimuths; ++m) {
        const double phi = 2.0 * std::numbers::pi * m / azimuths;
        map.weights.push_back((n + 1.0) * gl_weights[i] / 2.0 / azimuths);
        map.measurement.push_back(spin_coherent_state(n, nodes[i], phi));
      }
    }
  }

  Matrix resolution = Matrix::Zero(db, db);
  for (std::size_t k = 0; k < map.weights.size(); ++k) {
    resolution += map.weights[k] * map.measurement[k] * map.measurement[k].adjoint();
  }
  if ((resolution - Matrix::Identity(db, db)).cwiseAbs().maxCoeff() > tol::kOperator) {
    throw InvalidChannelError("measurement does not resolve the identity on B");
  }

  for (const Vector& b : map.measurement) {
    const Matrix s = u.slice(b);
    Eigen::JacobiSVD<Matrix> svd(s, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    if (sv.size() > 1 && sv[1] > tol::kOperator * std::max(1.0, sv[0])) {
      throw InvalidChannelError("isometry slice is not rank one; channel is not Hadamard");
    }
    map.preparation.push_back(svd.matrixU().col(0));
  }
  return map;
}

double degrading_map_deviation(const ChannelFamily& family,
                               std::span<const DensityOperator> test_states) {
  const DegradingMap map = degrading_map(family);
  const KrausChannel channel = std::get<KrausChannel>(make_channel(family));
  double worst = 0.0;
  for (const DensityOperator& sigma : test_states) {
    const ChannelOutputs out = channel_and_complement(channel, sigma);
    const Matrix simulated = map.apply(out.b.matrix());
    worst = std::max(worst, trace_norm(simulated - out.e.matrix()));
  }
  return worst;
}

}  // namespace tradeoff
