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

#include "deid/epsilon.h"

#include <cmath>

#include "absl/status/status.h"
#include "fmt/format.h"

namespace deid {

absl::StatusOr<Epsilon> Epsilon::Create(double value) {
  if (!std::isfinite(value) || value <= 0) {
    return absl::InvalidArgumentError(
        fmt::format("epsilon must be finite and positive, got {}", value));
  }
  return Epsilon(value);
}

}  // namespace deid
