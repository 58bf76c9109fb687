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

#ifndef DEID_LAPLACE_H_
#define DEID_LAPLACE_H_

#include "absl/status/statusor.h"
#include "deid/random_source.h"

namespace deid {

// Inverse CDF of the zero-centered Laplace distribution:
//   -scale * sign(u - 1/2) * ln(1 - 2|u - 1/2|),  u in (0, 1).
double LaplaceInverseCdf(double u, double scale);

double LaplaceCdf(double x, double scale);
double LaplaceLogDensity(double x, double scale);

// One draw from Lap(scale) using a single uniform from rng. InvalidArgument
// unless scale is positive and finite.
absl::StatusOr<double> SampleLaplace(double scale, RandomSource& rng);

}  // namespace deid

#endif  // DEID_LAPLACE_H_
