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

#ifndef DEID_TOOLS_DEID_COMMANDS_H_
#define DEID_TOOLS_DEID_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pipeline_config.h"

namespace deid::tools {

// Exit statuses shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a check or a document failed
inline constexpr int kExitConfigError = 2;  // bad flags, config or inputs

// Sanitizes every *.json annotated document under config.in (a directory or
// a single file) into config.out. Outputs are staged and only renamed into
// place once every document succeeded.
int RunDeid(const PipelineConfig& config, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::vector<double> epsilons = {0.1, 0.5, 1.0, 2.0, 5.0};
  // Swaps the mechanisms under test for their broken variants.
  bool negative_control = false;
  // Multiplier on the exponential-mechanism bound; 1 is the ε·d claim.
  double exp_bound_factor = 1.0;
  std::size_t sampler_draws = 100000;
  std::uint64_t seed = 20200226;
  std::optional<std::string> locations_db;  // default: built-in 10 cities
  std::vector<std::string> feature_columns;
  std::optional<std::string> report_path;
};

int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err);

// Runs the pattern recognizer over a plain-text file and prints an annotated
// document.
int RunRecognize(const std::string& input_path, const std::string& doc_id,
                 const LocaleConfig& locale, std::ostream& out,
                 std::ostream& err);

int RunInspectDb(const std::string& path,
                 const std::vector<std::string>& feature_columns,
                 std::ostream& out, std::ostream& err);

}  // namespace deid::tools

#endif  // DEID_TOOLS_DEID_COMMANDS_H_
