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

// Single-threaded reference versions of the parallel kernels. Each runs the
// same per-element code in index order; tests compare the two bit for bit.

#include <span>
#include <vector>

#include "tradeoff/curves.hpp"
#include "tradeoff/gain.hpp"
#include "tradeoff/oracle.hpp"

namespace tradeoff::serial {

std::vector<RatePoint> evaluate_grid(const CurveEvaluator& eval, CurveKind kind,
                                     int grid_size);

std::vector<std::vector<double>> evaluate_stream(const SampleStream& stream, CurveKind kind,
                                                 const std::vector<double>& lambdas);

std::vector<GainSweepRow> gain_sweep(std::span<const ChannelFamily> families,
                                     int grid_size = 512);

}  // namespace tradeoff::serial
