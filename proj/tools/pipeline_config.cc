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

#include "pipeline_config.h"

#include <cmath>
#include <fstream>
#include <iterator>
#include <set>

#include "absl/status/status.h"
#include "fmt/format.h"
#include "json.hpp"

namespace deid::tools {
namespace {

using ::nlohmann::json;

const std::set<std::string>& KnownKeys() {
  static const auto* keys = new std::set<std::string>{"epsilon",
                                                      "seed",
                                                      "locale",
                                                      "day_month_order",
                                                      "reference_date",
                                                      "locations_db",
                                                      "feature_columns",
                                                      "k",
                                                      "geo_threshold_km",
                                                      "restore_order",
                                                      "age_cap",
                                                      "strict",
                                                      "workers",
                                                      "pools",
                                                      "in",
                                                      "out"};
  return *keys;
}

absl::Status TypeError(const std::string& key, std::string_view expected) {
  return absl::InvalidArgumentError(
      fmt::format("config key '{}' must be {}", key, expected));
}

}  // namespace

absl::StatusOr<PipelineConfig> ParsePipelineConfig(std::string_view json_text) {
  json root = json::parse(json_text, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    return absl::InvalidArgumentError("config must be a JSON object");
  }
  PipelineConfig config;
  for (const auto& [key, value] : root.items()) {
    if (!KnownKeys().contains(key)) {
      return absl::InvalidArgumentError(
          fmt::format("unknown config key '{}'", key));
    }
    if (key == "epsilon") {
      if (!value.is_number()) return TypeError(key, "a number");
      config.epsilon = value.get<double>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) {
        return TypeError(key, "a non-negative integer");
      }
      config.seed = value.get<std::uint64_t>();
    } else if (key == "locale") {
      if (!value.is_string()) return TypeError(key, "a string");
      absl::StatusOr<Language> language =
          ParseLanguage(value.get<std::string>());
      if (!language.ok()) return language.status();
      config.language = *language;
    } else if (key == "day_month_order") {
      if (!value.is_string()) return TypeError(key, "a string");
      absl::StatusOr<DayMonthOrder> order =
          ParseDayMonthOrder(value.get<std::string>());
      if (!order.ok()) return order.status();
      config.day_month_order = *order;
    } else if (key == "reference_date") {
      if (!value.is_string()) return TypeError(key, "an ISO date string");
      absl::StatusOr<CivilDate> date = ParseIsoDate(value.get<std::string>());
      if (!date.ok()) return date.status();
      config.reference_date = *date;
    } else if (key == "locations_db" || key == "pools" || key == "in" ||
               key == "out") {
      if (!value.is_string()) return TypeError(key, "a string");
      const std::string text = value.get<std::string>();
      if (key == "locations_db") config.locations_db = text;
      if (key == "pools") config.pools = text;
      if (key == "in") config.in = text;
      if (key == "out") config.out = text;
    } else if (key == "feature_columns") {
      if (!value.is_array()) return TypeError(key, "an array of strings");
      config.feature_columns.clear();
      for (const json& column : value) {
        if (!column.is_string()) return TypeError(key, "an array of strings");
        config.feature_columns.push_back(column.get<std::string>());
      }
    } else if (key == "k" || key == "workers") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        return TypeError(key, "a positive integer");
      }
      (key == "k" ? config.k : config.workers) = value.get<std::size_t>();
    } else if (key == "geo_threshold_km") {
      if (!value.is_number()) return TypeError(key, "a number");
      config.geo_threshold_km = value.get<double>();
    } else if (key == "restore_order" || key == "strict") {
      if (!value.is_boolean()) return TypeError(key, "a boolean");
      (key == "strict" ? config.strict : config.restore_order) =
          value.get<bool>();
    } else if (key == "age_cap") {
      if (!value.is_number_integer()) return TypeError(key, "an integer");
      config.age_cap = value.get<std::int64_t>();
    }
  }
  if (absl::Status status = ValidatePipelineConfig(config); !status.ok()) {
    return status;
  }
  return config;
}

absl::StatusOr<PipelineConfig> LoadPipelineConfig(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    return absl::NotFoundError(fmt::format("cannot open config '{}'", path));
  }
  const std::string text((std::istreambuf_iterator<char>(file)),
                         std::istreambuf_iterator<char>());
  absl::StatusOr<PipelineConfig> config = ParsePipelineConfig(text);
  if (!config.ok()) {
    return absl::InvalidArgumentError(
        fmt::format("{}: {}", path, std::string(config.status().message())));
  }
  return config;
}

absl::Status ValidatePipelineConfig(const PipelineConfig& config) {
  if (!std::isfinite(config.epsilon) || config.epsilon <= 0) {
    return absl::InvalidArgumentError(
        fmt::format("epsilon must be finite and > 0, got {}", config.epsilon));
  }
  if (config.k < 1) return absl::InvalidArgumentError("k must be >= 1");
  if (std::isnan(config.geo_threshold_km) || config.geo_threshold_km <= 0) {
    return absl::InvalidArgumentError("geo_threshold_km must be > 0");
  }
  if (config.workers < 1 || config.workers > kMaxWorkers) {
    return absl::InvalidArgumentError(
        fmt::format("workers must be in [1, {}]", kMaxWorkers));
  }
  if (config.age_cap.has_value() && *config.age_cap < 0) {
    return absl::InvalidArgumentError("age_cap must be >= 0");
  }
  if (config.reference_date.has_value() && !config.reference_date->ok()) {
    return absl::InvalidArgumentError("reference_date is not a valid date");
  }
  return absl::OkStatus();
}

absl::StatusOr<SanitizerConfig> ToSanitizerConfig(
    const PipelineConfig& config) {
  if (absl::Status status = ValidatePipelineConfig(config); !status.ok()) {
    return status;
  }
  SanitizerConfig out;
  out.epsilon = *Epsilon::Create(config.epsilon);
  out.locale.language = config.language;
  out.locale.order = config.day_month_order;
  out.locale.reference_date = config.reference_date.value_or(Today());
  out.k = config.k;
  out.geo_threshold_km = config.geo_threshold_km;
  out.restore_order = config.restore_order;
  out.age_cap = config.age_cap;
  out.unknown_location = config.strict
                             ? UnknownLocationPolicy::kFail
                             : UnknownLocationPolicy::kUniformFallback;
  out.unparseable_temporal = config.strict
                                 ? UnparseableTemporalPolicy::kFail
                                 : UnparseableTemporalPolicy::kPlaceholder;
  return out;
}

}  // namespace deid::tools
