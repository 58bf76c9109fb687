// Copyright 2026 The dpdeid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deid/temporal_mechanism.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "deid/laplace.h"

namespace deid {

TemporalEntity SanitizeTemporal(const TemporalEntity& entity, Epsilon eps_share,
                                RandomSource& rng) {
  const double noise =
      LaplaceInverseCdf(rng.NextOpenUniform(), 1.0 / eps_share.value());
  // 2^62 keeps llround well-defined for absurdly small budgets.
  constexpr double kLimit = 4.611686018427387904e18;
  const double noisy =
      std::clamp(static_cast<double>(entity.magnitude) + noise, 0.0, kLimit);
  TemporalEntity out = entity;
  out.magnitude = std::llround(noisy);
  return out;
}

void RestoreOrder(std::span<const std::int64_t> originals,
                  std::span<std::int64_t> sanitized) {
  const std::size_t n = originals.size();
  std::vector<std::size_t> by_original(n);
  std::iota(by_original.begin(), by_original.end(), 0);
  std::sort(by_original.begin(), by_original.end(),
            [&](std::size_t a, std::size_t b) {
              return originals[a] < originals[b];
            });
  std::vector<std::int64_t> values(sanitized.begin(), sanitized.end());
  std::sort(values.begin(), values.end());
  for (std::size_t r = 1; r < n; ++r) {
    values[r] = std::max(values[r], values[r - 1] + 1);
  }
  for (std::size_t r = 0; r < n; ++r) sanitized[by_original[r]] = values[r];
}

}  // namespace deid
