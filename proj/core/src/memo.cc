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

#include "deid/memo.h"

#include "fmt/format.h"

namespace deid {

MemoKey TemporalMemoKey(EntityLabel label, const TemporalEntity& entity) {
  return MemoKey{label, CanonicalKey(fmt::format(
                            "{}:{}", GranularityName(entity.granularity),
                            entity.magnitude))};
}

absl::StatusOr<MemoKey> MemoKeyForSpan(const EntitySpan& span,
                                       const LocaleConfig& locale) {
  if (span.label == EntityLabel::kDate || span.label == EntityLabel::kAge) {
    absl::StatusOr<TemporalEntity> entity =
        ParseTemporal(span.surface, span.label, locale);
    if (!entity.ok()) return entity.status();
    return TemporalMemoKey(span.label, *entity);
  }
  return MemoKey{span.label, CanonicalKey(span.surface)};
}

}  // namespace deid
