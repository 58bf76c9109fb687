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

#include "deid/document_sanitizer.h"
#include "json.hpp"

namespace deid {

std::string AuditReport(const SanitizedDocument& sdoc) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [label, count] : sdoc.label_counts) {
    counts[std::string(LabelName(label))] = count;
  }
  nlohmann::ordered_json shares = nlohmann::ordered_json::array();
  for (const ShareReport& share : sdoc.budget.shares) {
    shares.push_back(nlohmann::ordered_json{{"label", LabelName(share.label)},
                                            {"epsilon", share.epsilon}});
  }
  nlohmann::ordered_json report = {
      {"doc_id", sdoc.doc_id},
      {"label_counts", std::move(counts)},
      {"budget",
       {{"policy", "uniform"},
        {"total_epsilon", sdoc.budget.total},
        {"dp_keys", sdoc.budget.shares.size()},
        {"shares", std::move(shares)},
        {"consumed_epsilon", sdoc.budget.consumed}}},
      {"warnings", sdoc.warnings},
  };
  return report.dump(2) + "\n";
}

std::string SerializeReplacements(const SanitizedDocument& sdoc) {
  nlohmann::ordered_json spans = nlohmann::ordered_json::array();
  for (const Replacement& r : sdoc.replacements) {
    spans.push_back(nlohmann::ordered_json{{"start", r.new_start},
                                           {"end", r.new_end},
                                           {"label", LabelName(r.label)},
                                           {"surface", r.surrogate},
                                           {"original_start", r.original_start},
                                           {"original_end", r.original_end}});
  }
  nlohmann::ordered_json root = {{"doc_id", sdoc.doc_id},
                                 {"text", sdoc.text},
                                 {"spans", std::move(spans)}};
  return root.dump(2) + "\n";
}

}  // namespace deid
