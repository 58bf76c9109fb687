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

#include "deid/surrogate_pool.h"

#include "absl/status/status.h"
#include "deid/text_util.h"
#include "fmt/format.h"
#include "json.hpp"

namespace deid {
namespace {

const std::vector<std::string>& EmptyList() {
  static const auto* empty = new std::vector<std::string>();
  return *empty;
}

bool IsUpperLetter(char32_t cp) {
  return (cp >= U'A' && cp <= U'Z') || (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7);
}

bool IsLowerLetter(char32_t cp) {
  return (cp >= U'a' && cp <= U'z') || (cp >= 0xDF && cp <= 0xFF && cp != 0xF7);
}

}  // namespace

absl::StatusOr<SurrogatePool> SurrogatePool::Create(
    std::map<EntityLabel, std::vector<std::string>> names) {
  for (EntityLabel required : {EntityLabel::kPer, EntityLabel::kOrg}) {
    auto it = names.find(required);
    if (it == names.end() || it->second.empty()) {
      return absl::InvalidArgumentError(fmt::format(
          "surrogate pool for {} must be non-empty", LabelName(required)));
    }
  }
  for (const auto& [label, list] : names) {
    for (const std::string& name : list) {
      if (CanonicalKey(name).empty()) {
        return absl::InvalidArgumentError(fmt::format(
            "surrogate pool for {} has an empty entry", LabelName(label)));
      }
    }
  }
  return SurrogatePool(std::move(names));
}

SurrogatePool SurrogatePool::Default() {
  std::map<EntityLabel, std::vector<std::string>> names;
  names[EntityLabel::kPer] = {
      "Julien",  "Camille",  "Antoine", "Claire",  "Mathieu", "Sophie",
      "Nicolas", "Élodie",   "Thomas",  "Laura",   "Hugo",    "Manon",
      "Louis",   "Chloé",    "Pierre",  "Léa",     "Maxime",  "Pauline",
      "Arthur",  "Inès",     "Benoît",  "Margaux", "Olivier", "Aurélie",
      "Gabriel", "Juliette", "Victor",  "Émilie",  "Raphaël", "Sarah",
      "Adrien",  "Lucie",    "Martin",  "Anaïs",   "Samuel",  "Noémie",
      "Daniel",  "Helen",    "George",  "Alice"};
  names[EntityLabel::kOrg] = {
      "Clinique des Tilleuls",     "Centre Hospitalier du Val",
      "Maison de Santé des Prés",  "Clinique Saint-Aubin",
      "Centre Médical des Vignes", "Hôpital des Quatre Vents",
      "Polyclinique du Lac",       "Centre de Soins Beauregard",
      "Riverside Medical Centre",  "Northfield Clinic"};
  return SurrogatePool(std::move(names));
}

absl::StatusOr<SurrogatePool> SurrogatePool::Parse(std::string_view json_text) {
  nlohmann::json root = nlohmann::json::parse(json_text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    return absl::InvalidArgumentError(
        "surrogate pool file must be a JSON object of label -> [names]");
  }
  std::map<EntityLabel, std::vector<std::string>> names;
  for (const auto& [key, value] : root.items()) {
    absl::StatusOr<EntityLabel> label = ParseLabel(key);
    if (!label.ok()) return label.status();
    if (!value.is_array()) {
      return absl::InvalidArgumentError(
          fmt::format("surrogate pool '{}' must be an array", key));
    }
    for (const nlohmann::json& entry : value) {
      if (!entry.is_string()) {
        return absl::InvalidArgumentError(
            fmt::format("surrogate pool '{}' must contain only strings", key));
      }
      names[*label].push_back(entry.get<std::string>());
    }
  }
  return Create(std::move(names));
}

const std::vector<std::string>& SurrogatePool::Names(EntityLabel label) const {
  auto it = names_.find(label);
  return it == names_.end() ? EmptyList() : it->second;
}

std::string GenerateLayoutPreserving(std::string_view original,
                                     RandomSource& rng) {
  std::u32string out = DecodeUtf8(original);
  for (char32_t& cp : out) {
    if (cp >= U'0' && cp <= U'9') {
      cp = U'0' + static_cast<char32_t>(rng.NextIndex(10));
    } else if (IsUpperLetter(cp)) {
      cp = U'A' + static_cast<char32_t>(rng.NextIndex(26));
    } else if (IsLowerLetter(cp)) {
      cp = U'a' + static_cast<char32_t>(rng.NextIndex(26));
    }
  }
  return EncodeUtf8(out);
}

}  // namespace deid
