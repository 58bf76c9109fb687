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

#ifndef DEID_EPSILON_H_
#define DEID_EPSILON_H_

#include "absl/status/statusor.h"

namespace deid {

// A privacy parameter: strictly positive and finite.
class Epsilon {
 public:
  static absl::StatusOr<Epsilon> Create(double value);

  double value() const { return value_; }

  friend bool operator==(Epsilon a, Epsilon b) { return a.value_ == b.value_; }

 private:
  explicit Epsilon(double value) : value_(value) {}
  double value_;
};

}  // namespace deid

#endif  // DEID_EPSILON_H_
