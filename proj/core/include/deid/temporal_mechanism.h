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

#ifndef DEID_TEMPORAL_MECHANISM_H_
#define DEID_TEMPORAL_MECHANISM_H_

#include <cstdint>
#include <span>

#include "deid/epsilon.h"
#include "deid/random_source.h"
#include "deid/temporal.h"

namespace deid {

// Unit-metric Laplace mechanism. Adds Lap(1/eps_share) noise in the entity's
// own granularity, then rounds to the nearest unit and clamps at zero. Only
// the magnitude changes.
TemporalEntity SanitizeTemporal(const TemporalEntity& entity, Epsilon eps_share,
                                RandomSource& rng);

// Permutes already-sanitized magnitudes so that their order matches the
// order of the originals, then separates ties by one unit so the ranks are
// strict. originals[i] pairs with sanitized[i]; originals must be distinct.
// Both steps only look at released values.
void RestoreOrder(std::span<const std::int64_t> originals,
                  std::span<std::int64_t> sanitized);

}  // namespace deid

#endif  // DEID_TEMPORAL_MECHANISM_H_
