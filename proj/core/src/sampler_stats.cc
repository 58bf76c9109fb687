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

#include "deid/sampler_stats.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "absl/status/status.h"
#include "deid/exponential_mechanism.h"
#include "deid/laplace.h"
#include "fmt/format.h"

namespace deid {

double KolmogorovSmirnovStatistic(const std::vector<double>& sorted,
                                  const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(sorted.size());
  double worst = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    const double above = (static_cast<double>(i) + 1) / n - f;
    const double below = f - static_cast<double>(i) / n;
    worst = std::max({worst, above, below});
  }
  return worst;
}

double KolmogorovSmirnovCritical1Pct(std::size_t n) {
  const double root = std::sqrt(static_cast<double>(n));
  return 1.628 / (root + 0.12 + 0.11 / root);
}

double ChiSquareStatistic(const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& probabilities) {
  double total = 0;
  for (std::uint64_t count : observed) total += static_cast<double>(count);
  double chi = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probabilities[i];
    const double diff = static_cast<double>(observed[i]) - expected;
    chi += diff * diff / expected;
  }
  return chi;
}

double ChiSquareCritical1Pct(std::size_t df) {
  constexpr double kZ99 = 2.3263478740408408;
  const double k = static_cast<double>(df);
  const double a = 2.0 / (9.0 * k);
  return k * std::pow(1.0 - a + kZ99 * std::sqrt(a), 3);
}

absl::StatusOr<SamplerReport> CheckSampler(double scale, std::size_t n,
                                           RandomSource& rng) {
  if (n < kMinSamplerDraws) {
    return absl::InvalidArgumentError(fmt::format(
        "sampler check needs at least {} draws, got {}", kMinSamplerDraws, n));
  }
  std::vector<double> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    absl::StatusOr<double> x = SampleLaplace(scale, rng);
    if (!x.ok()) return x.status();
    draws.push_back(*x);
  }
  SamplerReport report;
  report.n = n;
  report.scale = scale;
  double sum = 0;
  for (double x : draws) sum += x;
  report.mean = sum / static_cast<double>(n);
  double squares = 0;
  for (double x : draws) squares += (x - report.mean) * (x - report.mean);
  report.variance = squares / static_cast<double>(n - 1);
  report.expected_variance = 2 * scale * scale;
  report.variance_relative_error =
      std::abs(report.variance - report.expected_variance) /
      report.expected_variance;
  report.mean_tolerance =
      4 * std::sqrt(report.expected_variance / static_cast<double>(n));

  std::sort(draws.begin(), draws.end());
  report.ks_statistic = KolmogorovSmirnovStatistic(
      draws, [scale](double x) { return LaplaceCdf(x, scale); });
  report.ks_critical = KolmogorovSmirnovCritical1Pct(n);

  report.ks_pass = report.ks_statistic < report.ks_critical;
  report.mean_pass = std::abs(report.mean) <= report.mean_tolerance;
  report.variance_pass =
      report.variance_relative_error <= kVarianceRelativeTolerance;
  report.pass = report.ks_pass && report.mean_pass && report.variance_pass;
  return report;
}

absl::StatusOr<LocationSamplerReport> CheckLocationSampler(
    const LocationDb& db, std::size_t origin, Epsilon eps, std::size_t k,
    double geo_threshold_km, std::size_t n, RandomSource& rng) {
  absl::StatusOr<CandidateSet> candidates =
      BuildCandidateSet(db, origin, k, geo_threshold_km);
  if (!candidates.ok()) return candidates.status();
  const CandidateDistribution dist = LocationDistribution(*candidates, eps);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < dist.candidates.entries.size(); ++i) {
    position[dist.candidates.entries[i].index] = i;
  }
  std::vector<std::uint64_t> counts(dist.probabilities.size(), 0);
  for (std::size_t draw = 0; draw < n; ++draw) {
    absl::StatusOr<std::size_t> index =
        SanitizeLocation(db, origin, eps, k, geo_threshold_km, rng);
    if (!index.ok()) return index.status();
    auto it = position.find(*index);
    if (it == position.end()) {
      return absl::InternalError("draw outside the candidate set");
    }
    ++counts[it->second];
  }
  LocationSamplerReport report;
  report.n = n;
  report.categories = counts.size();
  if (counts.size() < 2) {
    report.pass = counts[0] == n;
    return report;
  }
  report.chi_square = ChiSquareStatistic(counts, dist.probabilities);
  report.critical = ChiSquareCritical1Pct(counts.size() - 1);
  report.pass = report.chi_square <= report.critical;
  return report;
}

}  // namespace deid
