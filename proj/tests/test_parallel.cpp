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

#include <omp.h>

#include <cstdlib>
#include <cstring>

#include "tradeoff/parallel.hpp"
#include "tradeoff/serial.hpp"

using namespace tradeoff;

namespace {

bool same(const RatePoint& a, const RatePoint& b) {
  return std::memcmp(&a.c, &b.c, sizeof(double)) == 0 &&
         std::memcmp(&a.second, &b.second, sizeof(double)) == 0 && a.mu == b.mu;
}

// Runs f with the OpenMP team forced to each of a few sizes.
template <class F>
void for_each_team(F f) {
  for (int threads : {1, 2, 4}) {
    omp_set_num_threads(threads);
    f();
  }
  omp_set_num_threads(omp_get_num_procs());
}

}  // namespace

TEST_CASE("grid evaluation matches the serial reference") {
  const std::vector<ChannelFamily> families{Dephasing{0.3}, Cloning{6}, Unruh{0.8}};
  for (const ChannelFamily& f : families) {
    const CurveEvaluator eval(f);
    for (CurveKind kind : {CurveKind::CQ, CurveKind::CE}) {
      const auto ref = serial::evaluate_grid(eval, kind, 257);
      for_each_team([&] {
        const auto par = evaluate_grid(eval, kind, 257);
        REQUIRE(par.size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(same(par[i], ref[i]));
      });
    }
  }
}

TEST_CASE("sample stream matches the serial reference") {
  SearchOptions o;
  o.n_samples = 300;
  o.seed = 21;
  SampleStream s{cloning_channel(3), 2, {canonical_ensemble(0.2)}, o};
  const std::vector<double> lambdas{1.0, 2.5};
  const auto ref = serial::evaluate_stream(s, CurveKind::CQ, lambdas);
  for_each_team([&] { CHECK(evaluate_stream(s, CurveKind::CQ, lambdas) == ref); });
}

TEST_CASE("gain sweep matches the serial reference") {
  const std::vector<ChannelFamily> families{Dephasing{0.0}, Dephasing{0.4}, Cloning{3},
                                            Unruh{0.5}};
  const auto ref = serial::gain_sweep(families, 129);
  for_each_team([&] {
    const auto par = gain_sweep(families, 129);
    REQUIRE(par.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) {
      CHECK(par[i].param == ref[i].param);
      CHECK(par[i].cq.gain == ref[i].cq.gain);
      CHECK(par[i].ce.gain == ref[i].ce.gain);
      CHECK(par[i].cq.degenerate == ref[i].cq.degenerate);
    }
  });
}

TEST_CASE("worker count honours TRADEOFF_THREADS") {
  omp_set_num_threads(4);
  unsetenv("TRADEOFF_THREADS");
  CHECK(worker_count() == 4);
  setenv("TRADEOFF_THREADS", "2", 1);
  CHECK(worker_count() == 2);
  setenv("TRADEOFF_THREADS", "16", 1);
  CHECK(worker_count() == 4);
  for (const char* junk : {"0", "-3", "two", ""}) {
    setenv("TRADEOFF_THREADS", junk, 1);
    CHECK(worker_count() == 4);
  }
  setenv("TRADEOFF_THREADS", "1", 1);
  const auto ref = serial::evaluate_grid(CurveEvaluator(Cloning{4}), CurveKind::CE, 65);
  const auto par = evaluate_grid(CurveEvaluator(Cloning{4}), CurveKind::CE, 65);
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(same(par[i], ref[i]));
  unsetenv("TRADEOFF_THREADS");
}
