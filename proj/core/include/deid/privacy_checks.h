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

#ifndef DEID_PRIVACY_CHECKS_H_
#define DEID_PRIVACY_CHECKS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/epsilon.h"
#include "deid/location_db.h"

namespace deid {

inline constexpr double kAnalyticTolerance = 1e-9;

// Largest places count for exhaustive exponential-mechanism checks.
inline constexpr std::size_t kMaxExhaustivePlaces = 20;

// Outcome of an analytic eps*d-privacy check.
//   excess = max |log P_v1(y) - log P_v2(y)| - bound_factor * eps * d(v1, v2)
// over the evaluated (y, v1, v2). pass <=> worst_excess <= tolerance.
struct PrivacyCheckResult {
  std::string mechanism;
  std::string description;
  double epsilon = 0;
  double bound_factor = 1.0;
  double worst_excess = 0;
  // max |log-ratio| / (eps d) over pairs with d > 0; how loose or tight the
  // bound is. 0 when no such pair exists.
  double worst_multiplier = 0;
  double tolerance = kAnalyticTolerance;
  std::size_t evaluated = 0;
  bool pass = false;
};

struct GridPoint {
  double y = 0;
  double v1 = 0;
  double v2 = 0;
};

// Cartesian product y x v1 x v2 without materializing it.
struct ProductGrid {
  std::vector<double> y;
  std::vector<double> v1;
  std::vector<double> v2;
};

// y, v1, v2 each in {-50, ..., 50}: 101^3 points.
ProductGrid DefaultLaplaceGrid();

// Log-density of an additive noise distribution at offset x.
using LogDensity = std::function<double(double)>;

// Checks an additive mechanism y = v + noise on a grid, with d = |v1 - v2|.
PrivacyCheckResult CheckAdditiveDPrivacy(std::string mechanism,
                                         const LogDensity& log_density,
                                         Epsilon eps,
                                         std::span<const GridPoint> grid);
PrivacyCheckResult CheckAdditiveDPrivacy(std::string mechanism,
                                         const LogDensity& log_density,
                                         Epsilon eps, const ProductGrid& grid);

// Laplace noise with scale 1/eps: the temporal mechanism before rounding.
PrivacyCheckResult CheckLaplaceDPrivacy(Epsilon eps,
                                        std::span<const GridPoint> grid);
PrivacyCheckResult CheckLaplaceDPrivacy(Epsilon eps, const ProductGrid& grid);

// Negative control: Gaussian noise with standard deviation 1/eps. Its
// log-ratio grows quadratically and must fail.
PrivacyCheckResult CheckGaussianControl(Epsilon eps, const ProductGrid& grid);

// Score of an output at feature distance d from the input.
using ScoreFunction = std::function<double(double)>;

double StandardScore(double distance);         // 1 - d
double SquaredDistanceScore(double distance);  // 1 - d^2, negative control

// Pairwise feature distances of every record.
std::vector<std::vector<double>> DistanceMatrix(const LocationDb& db);

// Exact check of the full-support exponential mechanism
//   P_v(y) = exp(eps U(v,y)) / sum_m exp(eps U(v,m))
// over every (v1, v2, y). FailedPrecondition above kMaxExhaustivePlaces;
// InvalidArgument for a non-square or empty matrix.
absl::StatusOr<PrivacyCheckResult> CheckExponentialDPrivacy(
    const std::vector<std::vector<double>>& distances, Epsilon eps,
    const ScoreFunction& score, double bound_factor = 1.0,
    std::string mechanism = "exponential");

// Database form with the standard score and bound factor 1.
absl::StatusOr<PrivacyCheckResult> CheckExponentialDPrivacy(
    const LocationDb& db, Epsilon eps);

// Built-in 10-place fixture (three features: population, cancer incidence,
// strokes) used by the verifier when no database is supplied. The feature
// values are illustrative, not real statistics.
LocationDb DefaultVerificationDb();

// Truncated-support mode (k nearest within a radius). Supports of two origins
// differ, so only outputs in both supports are compared. Informational: the
// pass flag is computed but nothing guarantees it.
absl::StatusOr<PrivacyCheckResult> SharedSupportReport(const LocationDb& db,
                                                       Epsilon eps,
                                                       std::size_t k,
                                                       double geo_threshold_km);

}  // namespace deid

#endif  // DEID_PRIVACY_CHECKS_H_
