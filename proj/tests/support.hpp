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

#include <cmath>
#include <random>

#include <Eigen/QR>

#include "tradeoff/linalg.hpp"

namespace support {

using tradeoff::Complex;
using tradeoff::Matrix;
using tradeoff::Vector;

inline Vector random_unit_vector(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v[i] = Complex(g(rng), g(rng));
  return v / v.norm();
}

// Mixed state of the given rank: Tr_R of a random pure state on dim x rank.
inline Matrix random_density(std::mt19937_64& rng, int dim, int rank) {
  std::normal_distribution<double> g;
  Matrix m(dim, rank);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < rank; ++j) m(i, j) = Complex(g(rng), g(rng));
  Matrix rho = m * m.adjoint();
  return rho / rho.trace().real();
}

inline Matrix random_unitary(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<Matrix> qr(m);
  return qr.householderQ();
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace support
