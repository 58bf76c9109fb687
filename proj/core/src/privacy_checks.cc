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

#include "deid/privacy_checks.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "deid/exponential_mechanism.h"
#include "deid/laplace.h"
#include "fmt/format.h"

namespace deid {
namespace {

// Accumulates one (log-ratio, distance) observation into result.
void Observe(double log_ratio, double distance, PrivacyCheckResult& result) {
  const double bound = result.bound_factor * result.epsilon * distance;
  const double excess = std::abs(log_ratio) - bound;
  if (result.evaluated == 0 || excess > result.worst_excess) {
    result.worst_excess = excess;
  }
  if (distance > 0) {
    result.worst_multiplier =
        std::max(result.worst_multiplier,
                 std::abs(log_ratio) / (result.epsilon * distance));
  }
  ++result.evaluated;
}

void Finish(PrivacyCheckResult& result) {
  result.pass = result.evaluated > 0 && result.worst_excess <= result.tolerance;
}

double GaussianLogDensity(double x, double sigma) {
  constexpr double kLogSqrtTwoPi = 0.91893853320467274178;
  return -std::log(sigma) - kLogSqrtTwoPi - x * x / (2 * sigma * sigma);
}

std::vector<double> LogSoftmaxRow(const std::vector<double>& distances,
                                  double eps, const ScoreFunction& score) {
  std::vector<double> logits;
  logits.reserve(distances.size());
  double top = -INFINITY;
  for (double d : distances) {
    logits.push_back(eps * score(d));
    top = std::max(top, logits.back());
  }
  double sum = 0;
  for (double l : logits) sum += std::exp(l - top);
  const double log_normalizer = top + std::log(sum);
  for (double& l : logits) l -= log_normalizer;
  return logits;
}

constexpr std::string_view kDefaultVerificationCsv =
    "name,lat,lon,population,cancer_incidence,strokes\n"
    "Dijon,47.3220,5.0415,156920,512.3,241\n"
    "Besançon,47.2378,6.0241,117912,498.7,228\n"
    "Belfort,47.6380,6.8628,46443,530.1,263\n"
    "Chalon-sur-Saône,46.7806,4.8539,44324,521.8,255\n"
    "Auxerre,47.7982,3.5673,34634,540.2,270\n"
    "Mâcon,46.3069,4.8287,33730,509.6,238\n"
    "Nevers,46.9896,3.1590,32990,552.4,281\n"
    "Sens,48.1975,3.2833,26463,536.9,266\n"
    "Montbéliard,47.5100,6.7983,25395,527.5,259\n"
    "Dole,47.0920,5.4897,23338,505.1,236\n";

}  // namespace

LocationDb DefaultVerificationDb() {
  return *ParseLocationDb(kDefaultVerificationCsv, {});
}

ProductGrid DefaultLaplaceGrid() {
  ProductGrid grid;
  for (int i = -50; i <= 50; ++i) grid.y.push_back(i);
  grid.v1 = grid.y;
  grid.v2 = grid.y;
  return grid;
}

PrivacyCheckResult CheckAdditiveDPrivacy(std::string mechanism,
                                         const LogDensity& log_density,
                                         Epsilon eps,
                                         std::span<const GridPoint> grid) {
  PrivacyCheckResult result;
  result.mechanism = std::move(mechanism);
  result.epsilon = eps.value();
  result.description = fmt::format("{} grid triples", grid.size());
  for (const GridPoint& p : grid) {
    Observe(log_density(p.y - p.v1) - log_density(p.y - p.v2),
            std::abs(p.v1 - p.v2), result);
  }
  Finish(result);
  return result;
}

PrivacyCheckResult CheckAdditiveDPrivacy(std::string mechanism,
                                         const LogDensity& log_density,
                                         Epsilon eps, const ProductGrid& grid) {
  PrivacyCheckResult result;
  result.mechanism = std::move(mechanism);
  result.epsilon = eps.value();
  result.description = fmt::format("{}x{}x{} product grid", grid.y.size(),
                                   grid.v1.size(), grid.v2.size());
  for (double y : grid.y) {
    for (double v1 : grid.v1) {
      const double first = log_density(y - v1);
      for (double v2 : grid.v2) {
        Observe(first - log_density(y - v2), std::abs(v1 - v2), result);
      }
    }
  }
  Finish(result);
  return result;
}

PrivacyCheckResult CheckLaplaceDPrivacy(Epsilon eps,
                                        std::span<const GridPoint> grid) {
  const double scale = 1.0 / eps.value();
  return CheckAdditiveDPrivacy(
      "laplace", [scale](double x) { return LaplaceLogDensity(x, scale); }, eps,
      grid);
}

PrivacyCheckResult CheckLaplaceDPrivacy(Epsilon eps, const ProductGrid& grid) {
  const double scale = 1.0 / eps.value();
  return CheckAdditiveDPrivacy(
      "laplace", [scale](double x) { return LaplaceLogDensity(x, scale); }, eps,
      grid);
}

PrivacyCheckResult CheckGaussianControl(Epsilon eps, const ProductGrid& grid) {
  const double sigma = 1.0 / eps.value();
  return CheckAdditiveDPrivacy(
      "gaussian-control",
      [sigma](double x) { return GaussianLogDensity(x, sigma); }, eps, grid);
}

double StandardScore(double distance) { return 1.0 - distance; }

double SquaredDistanceScore(double distance) {
  return 1.0 - distance * distance;
}

std::vector<std::vector<double>> DistanceMatrix(const LocationDb& db) {
  std::vector<std::vector<double>> d(db.size(), std::vector<double>(db.size()));
  for (std::size_t a = 0; a < db.size(); ++a) {
    for (std::size_t b = 0; b < db.size(); ++b) {
      d[a][b] = FeatureDistance(db, a, b);
    }
  }
  return d;
}

absl::StatusOr<PrivacyCheckResult> CheckExponentialDPrivacy(
    const std::vector<std::vector<double>>& distances, Epsilon eps,
    const ScoreFunction& score, double bound_factor, std::string mechanism) {
  const std::size_t n = distances.size();
  if (n == 0) return absl::InvalidArgumentError("empty distance matrix");
  if (n > kMaxExhaustivePlaces) {
    return absl::FailedPreconditionError(fmt::format(
        "{} places exceed the exhaustive limit of {}; use sampling mode", n,
        kMaxExhaustivePlaces));
  }
  for (const auto& row : distances) {
    if (row.size() != n) {
      return absl::InvalidArgumentError("distance matrix must be square");
    }
  }
  std::vector<std::vector<double>> log_p;
  log_p.reserve(n);
  for (const auto& row : distances) {
    log_p.push_back(LogSoftmaxRow(row, eps.value(), score));
  }
  PrivacyCheckResult result;
  result.mechanism = std::move(mechanism);
  result.epsilon = eps.value();
  result.bound_factor = bound_factor;
  result.description =
      fmt::format("exhaustive over {} places, full support", n);
  for (std::size_t v1 = 0; v1 < n; ++v1) {
    for (std::size_t v2 = 0; v2 < n; ++v2) {
      for (std::size_t y = 0; y < n; ++y) {
        Observe(log_p[v1][y] - log_p[v2][y], distances[v1][v2], result);
      }
    }
  }
  Finish(result);
  return result;
}

absl::StatusOr<PrivacyCheckResult> CheckExponentialDPrivacy(
    const LocationDb& db, Epsilon eps) {
  return CheckExponentialDPrivacy(DistanceMatrix(db), eps, StandardScore);
}

absl::StatusOr<PrivacyCheckResult> SharedSupportReport(
    const LocationDb& db, Epsilon eps, std::size_t k, double geo_threshold_km) {
  if (db.size() > kMaxExhaustivePlaces) {
    return absl::FailedPreconditionError(
        fmt::format("{} places exceed the exhaustive limit of {}", db.size(),
                    kMaxExhaustivePlaces));
  }
  // Dense per-origin log-probabilities; -inf outside the support.
  std::vector<std::vector<double>> log_p(
      db.size(), std::vector<double>(db.size(), -INFINITY));
  for (std::size_t v = 0; v < db.size(); ++v) {
    absl::StatusOr<CandidateSet> candidates =
        BuildCandidateSet(db, v, k, geo_threshold_km);
    if (!candidates.ok()) return candidates.status();
    const CandidateDistribution dist = LocationDistribution(*candidates, eps);
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
      log_p[v][dist.candidates.entries[i].index] =
          std::log(dist.probabilities[i]);
    }
  }
  PrivacyCheckResult result;
  result.mechanism = "exponential-truncated";
  result.epsilon = eps.value();
  result.description =
      fmt::format("shared support only, k={}, threshold {:g} km, {} places", k,
                  geo_threshold_km, db.size());
  for (std::size_t v1 = 0; v1 < db.size(); ++v1) {
    for (std::size_t v2 = 0; v2 < db.size(); ++v2) {
      for (std::size_t y = 0; y < db.size(); ++y) {
        if (std::isinf(log_p[v1][y]) || std::isinf(log_p[v2][y])) continue;
        Observe(log_p[v1][y] - log_p[v2][y], FeatureDistance(db, v1, v2),
                result);
      }
    }
  }
  Finish(result);
  return result;
}

}  // namespace deid
