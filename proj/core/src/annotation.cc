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

#include "deid/annotation.h"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "absl/status/status.h"
#include "deid/text_util.h"
#include "fmt/format.h"
#include "json.hpp"

namespace deid {
namespace {

using ::nlohmann::json;

constexpr std::array<std::string_view, 8> kLabelNames = {
    "PER", "DATE", "LOC", "ORG", "AGE", "TEL", "REF", "QID"};

std::string Describe(const EntitySpan& span) {
  return fmt::format("({},{},{})", span.start, span.end, LabelName(span.label));
}

// Line and column (both 1-based) of a byte position.
std::pair<int, int> LineColumn(std::string_view source, std::size_t byte) {
  byte = std::min(byte, source.size());
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (source[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

absl::StatusOr<std::int64_t> ReadOffset(const json& record,
                                        std::string_view field, int index) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_number_integer()) {
    return absl::InvalidArgumentError(fmt::format(
        "span {}: field '{}' missing or not an integer", index, field));
  }
  return it->get<std::int64_t>();
}

}  // namespace

std::string_view LabelName(EntityLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

absl::StatusOr<EntityLabel> ParseLabel(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return kAllLabels[i];
  }
  return absl::InvalidArgumentError(
      fmt::format("unknown entity label '{}'", name));
}

bool IsDpLabel(EntityLabel label) {
  return label == EntityLabel::kDate || label == EntityLabel::kAge ||
         label == EntityLabel::kLoc;
}

absl::StatusOr<AnnotatedDocument> AnnotatedDocument::Create(
    std::string doc_id, std::string text, std::vector<EntitySpan> spans) {
  if (doc_id.empty()) {
    return absl::InvalidArgumentError("doc_id must be non-empty");
  }
  absl::StatusOr<std::vector<std::size_t>> offsets = CodepointByteOffsets(text);
  if (!offsets.ok()) {
    return absl::InvalidArgumentError(fmt::format(
        "document '{}': {}", doc_id, std::string(offsets.status().message())));
  }
  const auto length = static_cast<std::int64_t>(offsets->size() - 1);

  std::stable_sort(spans.begin(), spans.end(),
                   [](const EntitySpan& a, const EntitySpan& b) {
                     return a.start < b.start;
                   });
  for (std::size_t i = 0; i < spans.size(); ++i) {
    const EntitySpan& span = spans[i];
    if (span.start < 0 || span.start >= span.end || span.end > length) {
      return absl::InvalidArgumentError(
          fmt::format("document '{}': span {} violates 0 <= start < end <= {}",
                      doc_id, Describe(span), length));
    }
    const std::size_t begin = (*offsets)[span.start];
    const std::size_t end = (*offsets)[span.end];
    if (std::string_view(text).substr(begin, end - begin) != span.surface) {
      return absl::InvalidArgumentError(
          fmt::format("document '{}': span {} surface does not match the text",
                      doc_id, Describe(span)));
    }
    if (i > 0 && spans[i - 1].end > span.start) {
      return absl::InvalidArgumentError(
          fmt::format("document '{}': spans {} and {} overlap", doc_id,
                      Describe(spans[i - 1]), Describe(span)));
    }
  }
  return AnnotatedDocument(std::move(doc_id), std::move(text), std::move(spans),
                           *std::move(offsets));
}

absl::StatusOr<AnnotatedDocument> ParseAnnotated(std::string_view source) {
  json root;
  try {
    root = json::parse(source);
  } catch (const json::parse_error& e) {
    auto [line, column] = LineColumn(source, e.byte == 0 ? 0 : e.byte - 1);
    return absl::InvalidArgumentError(fmt::format(
        "annotation format error at line {}, column {} (byte {}): {}", line,
        column, e.byte, e.what()));
  }
  if (!root.is_object()) {
    return absl::InvalidArgumentError(
        "annotation format error: top level must be an object");
  }
  for (const char* field : {"doc_id", "text"}) {
    if (!root.contains(field) || !root[field].is_string()) {
      return absl::InvalidArgumentError(fmt::format(
          "annotation format error: field '{}' missing or not a string",
          field));
    }
  }
  if (!root.contains("spans") || !root["spans"].is_array()) {
    return absl::InvalidArgumentError(
        "annotation format error: field 'spans' missing or not an array");
  }

  std::vector<EntitySpan> spans;
  int index = 0;
  for (const json& record : root["spans"]) {
    if (!record.is_object()) {
      return absl::InvalidArgumentError(fmt::format(
          "annotation format error: span {} is not an object", index));
    }
    EntitySpan span;
    absl::StatusOr<std::int64_t> start = ReadOffset(record, "start", index);
    if (!start.ok()) return start.status();
    absl::StatusOr<std::int64_t> end = ReadOffset(record, "end", index);
    if (!end.ok()) return end.status();
    if (!record.contains("label") || !record["label"].is_string() ||
        !record.contains("surface") || !record["surface"].is_string()) {
      return absl::InvalidArgumentError(fmt::format(
          "annotation format error: span {} needs string 'label' and 'surface'",
          index));
    }
    absl::StatusOr<EntityLabel> label =
        ParseLabel(record["label"].get<std::string>());
    if (!label.ok()) {
      return absl::InvalidArgumentError(fmt::format(
          "span {}: {}", index, std::string(label.status().message())));
    }
    span.start = *start;
    span.end = *end;
    span.label = *label;
    span.surface = record["surface"].get<std::string>();
    spans.push_back(std::move(span));
    ++index;
  }
  return AnnotatedDocument::Create(root["doc_id"].get<std::string>(),
                                   root["text"].get<std::string>(),
                                   std::move(spans));
}

absl::StatusOr<AnnotatedDocument> LoadAnnotated(std::istream& source) {
  std::string content((std::istreambuf_iterator<char>(source)),
                      std::istreambuf_iterator<char>());
  if (source.bad()) return absl::DataLossError("failed reading annotation");
  return ParseAnnotated(content);
}

std::string SerializeAnnotated(const AnnotatedDocument& doc) {
  nlohmann::ordered_json spans = nlohmann::ordered_json::array();
  for (const EntitySpan& span : doc.spans()) {
    spans.push_back(nlohmann::ordered_json{{"start", span.start},
                                           {"end", span.end},
                                           {"label", LabelName(span.label)},
                                           {"surface", span.surface}});
  }
  nlohmann::ordered_json root = {{"doc_id", doc.doc_id()},
                                 {"text", doc.text()},
                                 {"spans", std::move(spans)}};
  return root.dump(2) + "\n";
}

}  // namespace deid
