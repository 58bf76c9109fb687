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

#include "deid/laplace.h"

#include <cmath>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace deid {

double LaplaceInverseCdf(double u, double scale) {
  const double centered = u - 0.5;
  if (centered == 0) return 0.0;
  const double sign = centered > 0 ? 1.0 : -1.0;
  return -scale * sign * std::log1p(-2.0 * std::abs(centered));
}

double LaplaceCdf(double x, double scale) {
  if (x < 0) return 0.5 * std::exp(x / scale);
  return 1.0 - 0.5 * std::exp(-x / scale);
}

double LaplaceLogDensity(double x, double scale) {
  return -std::log(2.0 * scale) - std::abs(x) / scale;
}

absl::StatusOr<double> SampleLaplace(double scale, RandomSource& rng) {
  if (!std::isfinite(scale) || scale <= 0) {
    return absl::InvalidArgumentError(fmt::format(
        "Laplace scale must be finite and positive, got {}", scale));
  }
  return LaplaceInverseCdf(rng.NextOpenUniform(), scale);
}

}  // namespace deid
