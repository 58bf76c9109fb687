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

#ifndef DEID_EXPONENTIAL_MECHANISM_H_
#define DEID_EXPONENTIAL_MECHANISM_H_

#include <cstddef>
#include <limits>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/epsilon.h"
#include "deid/location_db.h"
#include "deid/random_source.h"

namespace deid {

inline constexpr double kNoGeoThreshold =
    std::numeric_limits<double>::infinity();

struct Candidate {
  std::size_t index = 0;
  double distance = 0;  // feature distance from the origin
};

// Support of the mechanism for one origin: the origin itself first, then the
// nearest places in feature space that lie within the geographic radius,
// ascending by distance with ties broken by record index.
struct CandidateSet {
  std::size_t origin = 0;
  std::size_t requested_k = 0;
  std::vector<Candidate> entries;

  // Fewer than requested_k places passed the geographic filter.
  bool truncated() const { return entries.size() < requested_k; }
};

// Probabilities aligned with candidates.entries; zero for every other place.
struct CandidateDistribution {
  CandidateSet candidates;
  std::vector<double> probabilities;
};

// InvalidArgument when k == 0, the origin is out of range or the threshold
// is negative/NaN. Pass kNoGeoThreshold to disable the geographic filter.
absl::StatusOr<CandidateSet> BuildCandidateSet(const LocationDb& db,
                                               std::size_t origin,
                                               std::size_t k,
                                               double geo_threshold_km);

// Exponential mechanism with score 1 - d over the candidates:
//   p(i) = exp(eps (1 - d_i)) / sum_m exp(eps (1 - d_m)).
CandidateDistribution LocationDistribution(const CandidateSet& candidates,
                                           Epsilon eps_share);

// Position (in distribution order) selected by uniform u in (0, 1) through
// cumulative inversion.
std::size_t InvertCumulative(const std::vector<double>& probabilities,
                             double u);

// Builds the candidate set, evaluates the distribution and draws one record
// index with a single uniform from rng.
absl::StatusOr<std::size_t> SanitizeLocation(const LocationDb& db,
                                             std::size_t origin,
                                             Epsilon eps_share, std::size_t k,
                                             double geo_threshold_km,
                                             RandomSource& rng);

}  // namespace deid

#endif  // DEID_EXPONENTIAL_MECHANISM_H_
