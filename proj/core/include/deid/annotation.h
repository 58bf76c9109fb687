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

#ifndef DEID_ANNOTATION_H_
#define DEID_ANNOTATION_H_

#include <array>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace deid {

// PHI categories carried by annotations.
enum class EntityLabel { kPer, kDate, kLoc, kOrg, kAge, kTel, kRef, kQid };

inline constexpr std::array<EntityLabel, 8> kAllLabels = {
    EntityLabel::kPer, EntityLabel::kDate, EntityLabel::kLoc,
    EntityLabel::kOrg, EntityLabel::kAge,  EntityLabel::kTel,
    EntityLabel::kRef, EntityLabel::kQid};

// Uppercase wire name, e.g. "LOC".
std::string_view LabelName(EntityLabel label);

// Exact, case-sensitive inverse of LabelName.
absl::StatusOr<EntityLabel> ParseLabel(std::string_view name);

// Labels whose surrogates come from a metric-private mechanism and therefore
// consume privacy budget.
bool IsDpLabel(EntityLabel label);

// A labeled region [start, end) of a document. Offsets count Unicode scalar
// values, not bytes.
struct EntitySpan {
  std::int64_t start = 0;
  std::int64_t end = 0;
  EntityLabel label = EntityLabel::kPer;
  std::string surface;

  friend bool operator==(const EntitySpan&, const EntitySpan&) = default;
};

// Text plus validated, sorted, non-overlapping standoff spans. Immutable.
class AnnotatedDocument {
 public:
  // Sorts spans by start and validates every span against text. Errors name
  // the offending span(s).
  static absl::StatusOr<AnnotatedDocument> Create(
      std::string doc_id, std::string text, std::vector<EntitySpan> spans);

  const std::string& doc_id() const { return doc_id_; }
  const std::string& text() const { return text_; }
  const std::vector<EntitySpan>& spans() const { return spans_; }

  // Byte offsets of each code point of text(), plus text().size().
  const std::vector<std::size_t>& byte_offsets() const { return byte_offsets_; }

 private:
  AnnotatedDocument(std::string doc_id, std::string text,
                    std::vector<EntitySpan> spans,
                    std::vector<std::size_t> byte_offsets)
      : doc_id_(std::move(doc_id)),
        text_(std::move(text)),
        spans_(std::move(spans)),
        byte_offsets_(std::move(byte_offsets)) {}

  std::string doc_id_;
  std::string text_;
  std::vector<EntitySpan> spans_;
  std::vector<std::size_t> byte_offsets_;
};

// Parses a standoff annotation file: a JSON object with "doc_id", "text" and
// "spans" (array of {start, end, label, surface}). Extra span fields are
// ignored so replacement sidecars load as well. Syntax errors report line and
// column.
absl::StatusOr<AnnotatedDocument> ParseAnnotated(std::string_view source);
absl::StatusOr<AnnotatedDocument> LoadAnnotated(std::istream& source);

// Inverse of ParseAnnotated; text and spans round-trip exactly.
std::string SerializeAnnotated(const AnnotatedDocument& doc);

}  // namespace deid

#endif  // DEID_ANNOTATION_H_
