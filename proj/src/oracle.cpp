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

#include "tradeoff/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <random>
#include <string>

#include "tradeoff/errors.hpp"
#include "tradeoff/parallel.hpp"

namespace tradeoff {

namespace {

constexpr int kMaxEnsembleSize = 6;
constexpr int kTwoLetterOutputCap = 8;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> dirichlet_one(std::mt19937_64& rng, int n) {
  std::exponential_distribution<double> exp1(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = exp1(rng);
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

void check_single_block(const ChannelFamily& family) {
  validate(family);
  if (std::holds_alternative<Unruh>(family)) {
    throw UnsupportedFamilyError("random ensemble search covers dephasing and cloning only");
  }
}

void check_options(const SearchOptions& options) {
  if (options.ensemble_size < 2 || options.ensemble_size > kMaxEnsembleSize) {
    throw DomainError("ensemble_size", "ensemble size cap must lie in [2, 6], got " +
                                           std::to_string(options.ensemble_size));
  }
  if (options.n_samples < 0) {
    throw DomainError("samples", "sample count must be non-negative");
  }
}

std::vector<std::pair<std::string, double>> family_params(const ChannelFamily& f) {
  if (const auto* d = std::get_if<Dephasing>(&f)) return {{"p", d->p}};
  if (const auto* c = std::get_if<Cloning>(&f)) return {{"n", static_cast<double>(c->n)}};
  const auto& u = std::get<Unruh>(f);
  return {{"z", u.z}, {"tail_tol", u.tail_tol}};
}

// |psi>_{A1 A1'} (x) |phi>_{A2 A2'} regrouped as (A1 A2)(A1' A2').
Vector regroup_product(const Vector& psi, int d1, const Vector& phi, int d2) {
  Vector out(static_cast<Eigen::Index>(d1) * d1 * d2 * d2);
  for (int a1 = 0; a1 < d1; ++a1)
    for (int i1 = 0; i1 < d1; ++i1)
      for (int a2 = 0; a2 < d2; ++a2)
        for (int i2 = 0; i2 < d2; ++i2) {
          const int a = a1 * d2 + a2;
          const int in = i1 * d2 + i2;
          out[a * d1 * d2 + in] = psi[a1 * d1 + i1] * phi[a2 * d2 + i2];
        }
  return out;
}

PureStateEnsemble product_ensemble(const PureStateEnsemble& x, const PureStateEnsemble& y) {
  std::vector<double> probs;
  std::vector<Vector> states;
  for (int i = 0; i < x.size(); ++i) {
    for (int j = 0; j < y.size(); ++j) {
      probs.push_back(x.probs()[i] * y.probs()[j]);
      states.push_back(regroup_product(x.states()[i], x.dim_in(), y.states()[j], y.dim_in()));
    }
  }
  const int d = x.dim_in() * y.dim_in();
  return PureStateEnsemble(ProbabilityVector(std::move(probs)), std::move(states), d, d);
}

// Stream entries [own_first, own_first + lambdas.size()) hold one injected
// ensemble per lambda; report l only sees its own. own_first < 0 disables.
std::vector<VerificationReport> summarize(const SampleStream& stream, CurveKind kind,
                                          const std::vector<double>& lambdas,
                                          const std::vector<ClosedFormOptimum>& optima,
                                          int own_first) {
  const auto values = evaluate_stream(stream, kind, lambdas);
  const int n_own = static_cast<int>(lambdas.size());
  std::vector<VerificationReport> reports(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) {
    VerificationReport& r = reports[l];
    r.lambda = lambdas[l];
    r.kind = kind;
    r.n_samples = stream.options.n_samples;
    r.n_injected = static_cast<int>(stream.injected.size());
    r.ensemble_size = stream.options.ensemble_size;
    r.diagonal = stream.options.diagonal;
    r.seed = stream.options.seed;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(values[l].size()); ++i) {
      const bool foreign = own_first >= 0 && i >= own_first && i < own_first + n_own &&
                           i != own_first + static_cast<int>(l);
      if (!foreign) best = std::max(best, values[l][i]);
    }
    r.best_sampled = best;
    r.closed_form = optima[l].value;
    r.closed_form_mu = optima[l].mu;
    r.max_violation = std::max(0.0, r.best_sampled - r.closed_form);
  }
  return reports;
}

}  // namespace

void check_lambda(CurveKind kind, double lambda) {
  if (kind == CurveKind::CQ && !(lambda >= 1.0 && std::isfinite(lambda))) {
    throw DomainError("lambda", "CQ trade-off weight must be >= 1, got " + std::to_string(lambda));
  }
  if (kind == CurveKind::CE && !(lambda >= 0.0 && lambda <= 1.0)) {
    throw DomainError("lambda",
                      "CE trade-off weight must lie in [0, 1], got " + std::to_string(lambda));
  }
}

double objective(CurveKind kind, double lambda, const CQQuantities& q) {
  check_lambda(kind, lambda);
  return kind == CurveKind::CQ ? q.I_X_B + lambda * q.I_coh
                               : q.I_AX_B - lambda * q.H_A_given_X;
}

ClosedFormOptimum closed_form_optimum(const ChannelFamily& family, CurveKind kind,
                                      double lambda, int grid_size) {
  check_lambda(kind, lambda);
  const CurveEvaluator eval(family);
  const auto f = [&](double mu) {
    const RatePoint p = eval.point(kind, mu);
    return kind == CurveKind::CQ ? p.c + lambda * p.second : p.c - lambda * p.second;
  };
  const ScalarMaximum m = maximize_over_mu(f, grid_size);
  return {m.value, m.mu};
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

PureStateEnsemble random_ensemble(int dim_in, const SearchOptions& options,
                                  std::uint64_t index) {
  std::mt19937_64 rng(sample_seed(options.seed, index));
  std::uniform_int_distribution<int> size_dist(2, options.ensemble_size);
  const int size = size_dist(rng);
  std::vector<double> probs = dirichlet_one(rng, size);

  const int dim = dim_in * dim_in;
  std::vector<Vector> states;
  states.reserve(size);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int x = 0; x < size; ++x) {
    Vector psi = Vector::Zero(dim);
    if (options.diagonal) {
      const std::vector<double> schmidt = dirichlet_one(rng, dim_in);
      for (int j = 0; j < dim_in; ++j) psi[j * dim_in + j] = std::sqrt(schmidt[j]);
    } else {
      for (int k = 0; k < dim; ++k) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        psi[k] = Complex(re, im);
      }
    }
    psi /= psi.norm();
    states.push_back(std::move(psi));
  }
  return PureStateEnsemble(ProbabilityVector(std::move(probs)), std::move(states), dim_in,
                           dim_in);
}

PureStateEnsemble SampleStream::ensemble(int index) const {
  const int head = static_cast<int>(injected.size());
  if (index < head) return injected[index];
  return random_ensemble(dim_in, options, static_cast<std::uint64_t>(index - head));
}

std::vector<std::vector<double>> evaluate_stream(const SampleStream& stream, CurveKind kind,
                                                 const std::vector<double>& lambdas) {
  for (double l : lambdas) check_lambda(kind, l);
  const int total = stream.total();
  std::vector<std::vector<double>> out(lambdas.size(), std::vector<double>(total));
  std::exception_ptr error;
#pragma omp parallel for num_threads(worker_count()) schedule(dynamic, 64)
  for (int i = 0; i < total; ++i) {
    try {
      const CQQuantities q = cq_quantities(stream.channel, stream.ensemble(i));
      for (std::size_t l = 0; l < lambdas.size(); ++l) out[l][i] = objective(kind, lambdas[l], q);
    } catch (...) {
#pragma omp critical(tradeoff_stream_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

std::vector<VerificationReport> random_ensemble_search(const ChannelFamily& family,
                                                       CurveKind kind,
                                                       const std::vector<double>& lambdas,
                                                       const SearchOptions& options) {
  check_single_block(family);
  check_options(options);
  for (double l : lambdas) check_lambda(kind, l);

  SampleStream stream{std::get<KrausChannel>(make_channel(family)), 0, {}, options};
  stream.dim_in = stream.channel.dim_in();
  for (int i = 0; i < kCanonicalInjections; ++i) {
    stream.injected.push_back(canonical_ensemble(family, i / 64.0));
  }
  std::vector<ClosedFormOptimum> optima;
  for (double l : lambdas) {
    optima.push_back(closed_form_optimum(family, kind, l));
    stream.injected.push_back(canonical_ensemble(family, optima.back().mu));
  }
  std::vector<VerificationReport> reports =
      summarize(stream, kind, lambdas, optima, kCanonicalInjections);
  for (VerificationReport& r : reports) {
    r.family = family_name(family);
    r.params = family_params(family);
    r.n_injected = kCanonicalInjections + 1;
  }
  return reports;
}

VerificationReport random_ensemble_search(const ChannelFamily& family, CurveKind kind,
                                          double lambda, const SearchOptions& options) {
  return random_ensemble_search(family, kind, std::vector<double>{lambda}, options).front();
}

VerificationReport two_letter_check(const ChannelFamily& first, const ChannelFamily& second,
                                    CurveKind kind, double lambda,
                                    const SearchOptions& options) {
  check_single_block(first);
  check_single_block(second);
  check_options(options);
  check_lambda(kind, lambda);

  const KrausChannel n1 = std::get<KrausChannel>(make_channel(first));
  const KrausChannel n2 = std::get<KrausChannel>(make_channel(second));
  if (n1.dim_out() * n2.dim_out() > kTwoLetterOutputCap) {
    throw DomainError("dimension", "two-letter check is capped at combined output dimension 8, got " +
                                       std::to_string(n1.dim_out() * n2.dim_out()));
  }
  const ClosedFormOptimum o1 = closed_form_optimum(first, kind, lambda);
  const ClosedFormOptimum o2 = closed_form_optimum(second, kind, lambda);

  SampleStream stream{tensor_product(n1, n2), n1.dim_in() * n2.dim_in(), {}, options};
  stream.injected.push_back(
      product_ensemble(canonical_ensemble(first, o1.mu), canonical_ensemble(second, o2.mu)));

  const ClosedFormOptimum sum{o1.value + o2.value, 0.0};
  VerificationReport r = summarize(stream, kind, {lambda}, {sum}, -1).front();
  r.family = family_name(first) + " (x) " + family_name(second);
  for (auto [k, v] : family_params(first)) r.params.emplace_back(k + "1", v);
  for (auto [k, v] : family_params(second)) r.params.emplace_back(k + "2", v);
  return r;
}

}  // namespace tradeoff
