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

#ifndef DEID_SURROGATE_POOL_H_
#define DEID_SURROGATE_POOL_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/random_source.h"

namespace deid {

// Replacement strings for labels substituted at random (PER, ORG).
class SurrogatePool {
 public:
  // PER and ORG lists must be non-empty; empty strings are rejected.
  static absl::StatusOr<SurrogatePool> Create(
      std::map<EntityLabel, std::vector<std::string>> names);

  // Built-in French/English given names and generic care-facility names.
  static SurrogatePool Default();

  // JSON object mapping label names to string arrays, e.g.
  // {"PER": ["Julien", ...], "ORG": [...]}.
  static absl::StatusOr<SurrogatePool> Parse(std::string_view json_text);

  // Empty for labels without a list.
  const std::vector<std::string>& Names(EntityLabel label) const;

 private:
  explicit SurrogatePool(std::map<EntityLabel, std::vector<std::string>> names)
      : names_(std::move(names)) {}

  std::map<EntityLabel, std::vector<std::string>> names_;
};

// Random string with the character-class layout of original: digits become
// random digits, letters random letters of the same case, everything else is
// copied. Used for TEL, QID and REF.
std::string GenerateLayoutPreserving(std::string_view original,
                                     RandomSource& rng);

}  // namespace deid

#endif  // DEID_SURROGATE_POOL_H_
