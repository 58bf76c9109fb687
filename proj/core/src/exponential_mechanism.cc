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

#include "deid/exponential_mechanism.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace deid {

absl::StatusOr<CandidateSet> BuildCandidateSet(const LocationDb& db,
                                               std::size_t origin,
                                               std::size_t k,
                                               double geo_threshold_km) {
  if (k == 0) return absl::InvalidArgumentError("k must be at least 1");
  if (origin >= db.size()) {
    return absl::InvalidArgumentError(fmt::format(
        "origin index {} outside database of {} places", origin, db.size()));
  }
  if (std::isnan(geo_threshold_km) || geo_threshold_km < 0) {
    return absl::InvalidArgumentError("geo threshold must be >= 0");
  }
  const LocationRecord& home = db.record(origin);
  std::vector<Candidate> others;
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (i == origin) continue;
    const LocationRecord& r = db.record(i);
    if (HaversineKm(home.lat, home.lon, r.lat, r.lon) > geo_threshold_km) {
      continue;
    }
    others.push_back({i, FeatureDistance(db, origin, i)});
  }
  const std::size_t keep = std::min(others.size(), k - 1);
  std::partial_sort(others.begin(), others.begin() + keep, others.end(),
                    [](const Candidate& a, const Candidate& b) {
                      if (a.distance != b.distance) {
                        return a.distance < b.distance;
                      }
                      return a.index < b.index;
                    });
  CandidateSet set;
  set.origin = origin;
  set.requested_k = k;
  set.entries.reserve(keep + 1);
  set.entries.push_back({origin, 0.0});
  set.entries.insert(set.entries.end(), others.begin(), others.begin() + keep);
  return set;
}

CandidateDistribution LocationDistribution(const CandidateSet& candidates,
                                           Epsilon eps_share) {
  const double eps = eps_share.value();
  // Scores are 1 - d <= 1; shifting every exponent by -eps leaves the
  // normalized result unchanged and keeps exp() from overflowing.
  std::vector<double> weights;
  weights.reserve(candidates.entries.size());
  double total = 0;
  for (const Candidate& c : candidates.entries) {
    const double w = std::exp(eps * (1.0 - c.distance) - eps);
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return CandidateDistribution{candidates, std::move(weights)};
}

std::size_t InvertCumulative(const std::vector<double>& probabilities,
                             double u) {
  double cumulative = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    cumulative += probabilities[i];
    if (u < cumulative) return i;
  }
  // u fell in the rounding gap above the final cumulative sum.
  for (std::size_t i = probabilities.size(); i-- > 0;) {
    if (probabilities[i] > 0) return i;
  }
  return 0;
}

absl::StatusOr<std::size_t> SanitizeLocation(const LocationDb& db,
                                             std::size_t origin,
                                             Epsilon eps_share, std::size_t k,
                                             double geo_threshold_km,
                                             RandomSource& rng) {
  absl::StatusOr<CandidateSet> candidates =
      BuildCandidateSet(db, origin, k, geo_threshold_km);
  if (!candidates.ok()) return candidates.status();
  const CandidateDistribution dist =
      LocationDistribution(*candidates, eps_share);
  const std::size_t pick =
      InvertCumulative(dist.probabilities, rng.NextOpenUniform());
  return dist.candidates.entries[pick].index;
}

}  // namespace deid
