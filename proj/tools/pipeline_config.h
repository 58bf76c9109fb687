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

#ifndef DEID_TOOLS_PIPELINE_CONFIG_H_
#define DEID_TOOLS_PIPELINE_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "deid/document_sanitizer.h"
#include "deid/locale.h"

namespace deid::tools {

// Settings for a batch de-identification run. Read from a JSON file whose
// keys are the snake_case field names below; unknown keys are rejected.
// Command-line flags override file values.
struct PipelineConfig {
  double epsilon = 1.0;
  std::optional<std::uint64_t> seed;  // absent: entropy-seeded run
  Language language = Language::kFrench;
  DayMonthOrder day_month_order = DayMonthOrder::kDayFirst;
  std::optional<CivilDate> reference_date;  // absent: today (UTC)
  std::optional<std::string> locations_db;
  std::vector<std::string> feature_columns;  // empty: every extra column
  std::size_t k = 10;
  double geo_threshold_km = 100.0;
  bool restore_order = false;
  std::optional<std::int64_t> age_cap;
  bool strict = true;
  std::size_t workers = 1;
  std::optional<std::string> pools;
  std::string in;
  std::string out;
};

inline constexpr std::size_t kMaxWorkers = 256;

// Parses a configuration file body on top of the defaults.
absl::StatusOr<PipelineConfig> ParsePipelineConfig(std::string_view json_text);
absl::StatusOr<PipelineConfig> LoadPipelineConfig(const std::string& path);

// Range checks shared by file and flag input.
absl::Status ValidatePipelineConfig(const PipelineConfig& config);

// Sanitizer settings derived from a validated config.
absl::StatusOr<SanitizerConfig> ToSanitizerConfig(const PipelineConfig& config);

}  // namespace deid::tools

#endif  // DEID_TOOLS_PIPELINE_CONFIG_H_
