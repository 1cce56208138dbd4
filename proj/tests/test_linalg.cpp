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
#include "tradeoff/linalg.hpp"

using namespace tradeoff;

TEST_CASE("binary entropy") {
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(binary_entropy(0.25) - 0.8112781244591328) < 1e-12);
  CHECK_THROWS_AS(binary_entropy(-0.01), DomainError);
  CHECK_THROWS_AS(binary_entropy(1.01), DomainError);
  try {
    binary_entropy(2.0);
  } catch (const DomainError& e) {
    CHECK(e.parameter() == "mu");
  }
}

TEST_CASE("shannon entropy") {
  CHECK(shannon_entropy(ProbabilityVector({1.0, 0.0, 0.0})) == 0.0);
  CHECK(std::abs(shannon_entropy(ProbabilityVector::uniform(8)) - 3.0) < 1e-12);
  CHECK(std::abs(shannon_entropy(ProbabilityVector({1.0 / 3.0, 2.0 / 3.0})) -
                 0.9182958340544895) < 1e-12);
}

TEST_CASE("probability vector validation") {
  CHECK_THROWS_AS(ProbabilityVector({0.5, 0.6}), InvalidDistributionError);
  CHECK_THROWS_AS(ProbabilityVector({1.0 + 1e-11, -1e-11}), InvalidDistributionError);
  CHECK_THROWS_AS(ProbabilityVector(std::vector<double>{}), InvalidDistributionError);
  const ProbabilityVector clamped({1.0 + 1e-13, -1e-13});
  CHECK(clamped[1] == 0.0);
}

TEST_CASE("von Neumann entropy") {
  std::mt19937_64 rng(1);
  for (int d : {2, 3, 7}) {
    const DensityOperator pure = DensityOperator::pure(support::random_unit_vector(rng, d));
    CHECK(std::abs(von_neumann_entropy(pure)) < 1e-10);
  }
  CHECK(std::abs(von_neumann_entropy(DensityOperator::maximally_mixed(2)) - 1.0) < 1e-14);
  const double probs[] = {0.9, 0.1};
  CHECK(std::abs(von_neumann_entropy(DensityOperator::diagonal(probs)) - 0.4689955935892812) <
        1e-12);
}

TEST_CASE("density operator validation") {
  Matrix m = Matrix::Identity(2, 2) / 2.0;
  m(0, 1) = Complex(0.1, 0.0);
  CHECK_THROWS_AS(DensityOperator{m}, InvalidStateError);
  CHECK_THROWS_AS(DensityOperator{Matrix::Identity(2, 2)}, InvalidStateError);
  Matrix neg = Matrix::Zero(2, 2);
  neg(0, 0) = 1.1;
  neg(1, 1) = -0.1;
  CHECK_THROWS_AS(DensityOperator{neg}, InvalidStateError);
  CHECK_THROWS_AS(DensityOperator{Matrix::Zero(2, 3)}, ShapeError);
  Vector v = Vector::Zero(2);
  v[0] = 1.1;
  CHECK_THROWS_AS(DensityOperator::pure(v), InvalidStateError);
}

TEST_CASE("partial trace examples") {
  Vector bell = Vector::Zero(4);
  bell[0] = bell[3] = 1.0 / std::sqrt(2.0);
  const int dims[] = {2, 2};
  const int keep_a[] = {0}, keep_b[] = {1};
  const DensityOperator ra = partial_trace(DensityOperator::pure(bell), dims, keep_a);
  CHECK(support::max_abs(ra.matrix() - Matrix::Identity(2, 2) / 2.0) < 1e-15);

  std::mt19937_64 rng(2);
  const Matrix a = support::random_density(rng, 2, 2);
  const Matrix b = support::random_density(rng, 3, 2);
  const int dims23[] = {2, 3};
  const DensityOperator prod(kron(a, b));
  CHECK(support::max_abs(partial_trace(prod, dims23, keep_a).matrix() - a) < 1e-14);
  CHECK(support::max_abs(partial_trace(prod, dims23, keep_b).matrix() - b) < 1e-14);

  // Purification sqrt(mu)|00> + sqrt(1-mu)|11>: tracing A leaves diag(mu, 1-mu).
  const double mu = 0.3;
  Vector psi = Vector::Zero(4);
  psi[0] = std::sqrt(mu);
  psi[3] = std::sqrt(1.0 - mu);
  const Matrix rb = partial_trace(DensityOperator::pure(psi), dims, keep_b).matrix();
  CHECK(std::abs(rb(0, 0).real() - 0.3) < 1e-15);
  CHECK(std::abs(rb(1, 1).real() - 0.7) < 1e-15);
  CHECK(std::abs(rb(0, 1)) == 0.0);
}

TEST_CASE("partial trace shape errors") {
  const DensityOperator rho = DensityOperator::maximally_mixed(4);
  const int bad_dims[] = {2, 3};
  const int dims[] = {2, 2};
  const int keep[] = {0};
  const int out_of_range[] = {2};
  const int repeated[] = {0, 0};
  CHECK_THROWS_AS(partial_trace(rho, bad_dims, keep), ShapeError);
  CHECK_THROWS_AS(partial_trace(rho, dims, out_of_range), ShapeError);
  CHECK_THROWS_AS(partial_trace(rho, dims, repeated), ShapeError);
  CHECK_THROWS_AS(partial_trace(rho, dims, std::span<const int>{}), ShapeError);
}

TEST_CASE("partial trace of three parties keeps order and validity") {
  std::mt19937_64 rng(3);
  const Vector psi = support::random_unit_vector(rng, 2 * 3 * 2);
  const DensityOperator rho = DensityOperator::pure(psi);
  const int dims[] = {2, 3, 2};
  const int keep_ac[] = {0, 2};
  const DensityOperator r = partial_trace(rho, dims, keep_ac);
  CHECK(r.dim() == 4);
  CHECK(std::abs(r.matrix().trace().real() - 1.0) < 1e-12);
  CHECK_NOTHROW(DensityOperator(r.matrix()));
  CHECK(support::max_abs(reduce_pure(psi, dims, keep_ac) - r.matrix()) < 1e-14);
}

TEST_CASE("property: unitary invariance of the entropy") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 6;
    const Matrix rho = support::random_density(rng, d, 1 + trial % d);
    const Matrix u = support::random_unitary(rng, d);
    CHECK(std::abs(hermitian_entropy(rho) - hermitian_entropy(u * rho * u.adjoint())) < 1e-9);
  }
}

TEST_CASE("property: Schmidt symmetry of bipartite pure states") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int da = 2 + trial % 3, db = 2 + trial % 5;
    const Vector psi = support::random_unit_vector(rng, da * db);
    const int dims[] = {da, db};
    const int keep_a[] = {0}, keep_b[] = {1};
    const double ha = hermitian_entropy(reduce_pure(psi, dims, keep_a));
    const double hb = hermitian_entropy(reduce_pure(psi, dims, keep_b));
    CHECK(std::abs(ha - hb) < 1e-9);
  }
}

TEST_CASE("property: Shannon entropy is at most log2 d") {
  std::mt19937_64 rng(6);
  std::exponential_distribution<double> e(1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 9;
    std::vector<double> p(d);
    double s = 0.0;
    for (double& x : p) s += (x = e(rng));
    for (double& x : p) x /= s;
    CHECK(shannon_entropy(ProbabilityVector(p)) <= std::log2(d) + 1e-9);
  }
  CHECK(std::abs(shannon_entropy(ProbabilityVector::uniform(5)) - std::log2(5.0)) < 1e-9);
}

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s += 1e16;
  for (int i = 0; i < 1000; ++i) s += 1.0;
  s += -1e16;
  CHECK(s.value() == 1000.0);
}

TEST_CASE("spectrum clamping window") {
  RealVector ok(2), bad(2);
  ok << 1.0 + 5e-11, -5e-11;
  bad << 1.0 + 1e-9, -1e-9;
  CHECK(std::abs(spectrum_entropy(ok)) < 1e-9);
  CHECK_THROWS_AS(spectrum_entropy(bad), InvalidStateError);
}
