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

#ifndef DEID_SAMPLER_STATS_H_
#define DEID_SAMPLER_STATS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/epsilon.h"
#include "deid/location_db.h"
#include "deid/random_source.h"

namespace deid {

inline constexpr std::size_t kMinSamplerDraws = 10000;
inline constexpr double kVarianceRelativeTolerance = 0.02;

// Two-sided one-sample Kolmogorov-Smirnov statistic of sorted samples
// against cdf.
double KolmogorovSmirnovStatistic(const std::vector<double>& sorted,
                                  const std::function<double(double)>& cdf);

// 1% critical value, Stephens' finite-n form 1.628 / (sqrt(n) + 0.12 +
// 0.11 / sqrt(n)).
double KolmogorovSmirnovCritical1Pct(std::size_t n);

// Pearson statistic for observed counts against probabilities (same order).
double ChiSquareStatistic(const std::vector<std::uint64_t>& observed,
                          const std::vector<double>& probabilities);

// Upper 1% quantile of chi-square with df degrees of freedom
// (Wilson-Hilferty).
double ChiSquareCritical1Pct(std::size_t df);

struct SamplerReport {
  std::size_t n = 0;
  double scale = 0;
  double ks_statistic = 0;
  double ks_critical = 0;
  double mean = 0;
  double mean_tolerance = 0;  // four standard errors
  double variance = 0;
  double expected_variance = 0;  // 2 scale^2
  double variance_relative_error = 0;
  bool ks_pass = false;
  bool mean_pass = false;
  bool variance_pass = false;
  bool pass = false;
};

// Draws n Laplace(scale) samples and compares them with the analytic law.
// InvalidArgument for n < kMinSamplerDraws or a non-positive scale.
absl::StatusOr<SamplerReport> CheckSampler(double scale, std::size_t n,
                                           RandomSource& rng);

struct LocationSamplerReport {
  std::size_t n = 0;
  std::size_t categories = 0;
  double chi_square = 0;
  double critical = 0;
  bool pass = false;
};

// Secondary, sampling-based check of SanitizeLocation against the analytic
// candidate distribution.
absl::StatusOr<LocationSamplerReport> CheckLocationSampler(
    const LocationDb& db, std::size_t origin, Epsilon eps, std::size_t k,
    double geo_threshold_km, std::size_t n, RandomSource& rng);

}  // namespace deid

#endif  // DEID_SAMPLER_STATS_H_
