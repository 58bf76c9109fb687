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

#ifndef DEID_DOCUMENT_SANITIZER_H_
#define DEID_DOCUMENT_SANITIZER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/epsilon.h"
#include "deid/exponential_mechanism.h"
#include "deid/locale.h"
#include "deid/location_db.h"
#include "deid/random_source.h"
#include "deid/surrogate_pool.h"

namespace deid {

enum class UnknownLocationPolicy { kFail, kUniformFallback };
enum class UnparseableTemporalPolicy { kFail, kPlaceholder };

struct SanitizerConfig {
  Epsilon epsilon = *Epsilon::Create(1.0);
  LocaleConfig locale;
  std::size_t k = 10;
  double geo_threshold_km = 100.0;
  bool restore_order = false;
  std::optional<std::int64_t> age_cap;  // YEAR-granularity ages only
  UnknownLocationPolicy unknown_location = UnknownLocationPolicy::kFail;
  UnparseableTemporalPolicy unparseable_temporal =
      UnparseableTemporalPolicy::kFail;
};

// One substituted span. Original offsets are kept for re-alignment; the
// original surface is deliberately absent.
struct Replacement {
  std::int64_t original_start = 0;
  std::int64_t original_end = 0;
  EntityLabel label = EntityLabel::kPer;
  std::string surrogate;
  std::int64_t new_start = 0;
  std::int64_t new_end = 0;
};

struct ShareReport {
  EntityLabel label = EntityLabel::kPer;
  double epsilon = 0;
};

// Budget summary without keys: keys are derived from original values.
// Shares are listed in order of first occurrence in the document.
struct BudgetReport {
  double total = 0;
  std::vector<ShareReport> shares;
  double consumed = 0;
};

struct SanitizedDocument {
  std::string doc_id;
  std::string text;
  std::vector<Replacement> replacements;
  BudgetReport budget;
  std::map<EntityLabel, int> label_counts;
  std::vector<std::string> warnings;
};

// Substitutes every span of doc. DATE/AGE go through the unit-metric Laplace
// mechanism and are re-rendered in their original format, LOC through the
// feature-space exponential mechanism, PER/ORG through pool draws without
// replacement, and TEL/QID/REF through layout-preserving random strings.
// Every surrogate is memoized per (label, canonical key) and the budget is
// split uniformly over the distinct DATE/AGE/LOC keys.
//
// db may be null when the document has no LOC span. Errors never quote
// original surfaces.
absl::StatusOr<SanitizedDocument> SanitizeDocument(
    const AnnotatedDocument& doc, const LocationDb* db,
    const SurrogatePool& pools, const SanitizerConfig& config,
    RandomSource& rng);

// JSON audit: per-label counts, budget shares and consumption, warnings.
// Contains no original surface.
std::string AuditReport(const SanitizedDocument& sdoc);

// Replacement sidecar in the annotation file format: the sanitized text with
// one span per surrogate (new offsets), plus original_start/original_end.
std::string SerializeReplacements(const SanitizedDocument& sdoc);

}  // namespace deid

#endif  // DEID_DOCUMENT_SANITIZER_H_
