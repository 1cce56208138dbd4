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

#include "tradeoff/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace tradeoff {

int worker_count() {
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("TRADEOFF_THREADS")) {
    try {
      std::size_t used = 0;
      const int cap = std::stoi(env, &used);
      if (used == std::string(env).size() && cap > 0) n = std::min(n, cap);
    } catch (const std::exception&) {
      // Ignore unparsable values.
    }
  }
  return std::max(1, n);
}

}  // namespace tradeoff
