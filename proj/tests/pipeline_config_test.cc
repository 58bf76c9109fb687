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

#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace deid::tools {
namespace {

using ::testing::HasSubstr;

TEST(PipelineConfig, DefaultsAreValid) {
  auto config = ParsePipelineConfig("{}");
  ASSERT_TRUE(config.ok());
  EXPECT_EQ(config->epsilon, 1.0);
  EXPECT_FALSE(config->seed.has_value());
  EXPECT_EQ(config->k, 10u);
  EXPECT_TRUE(config->strict);
  EXPECT_FALSE(config->restore_order);
}

TEST(PipelineConfig, ParsesEveryKey) {
  auto config = ParsePipelineConfig(R"({
    "epsilon": 0.5, "seed": 7, "locale": "en", "day_month_order": "mdy",
    "reference_date": "2020-12-31", "locations_db": "db.csv",
    "feature_columns": ["population"], "k": 5, "geo_threshold_km": 50,
    "restore_order": true, "age_cap": 90, "strict": false, "workers": 3,
    "in": "in", "out": "out", "pools": "pools.json"})");
  ASSERT_TRUE(config.ok()) << config.status();
  EXPECT_EQ(config->epsilon, 0.5);
  EXPECT_EQ(*config->seed, 7u);
  EXPECT_EQ(config->language, Language::kEnglish);
  EXPECT_EQ(config->day_month_order, DayMonthOrder::kMonthFirst);
  EXPECT_EQ(*config->locations_db, "db.csv");
  EXPECT_EQ(config->k, 5u);
  EXPECT_EQ(config->geo_threshold_km, 50.0);
  EXPECT_TRUE(config->restore_order);
  EXPECT_EQ(*config->age_cap, 90);
  EXPECT_FALSE(config->strict);
  EXPECT_EQ(config->workers, 3u);

  auto sanitizer = ToSanitizerConfig(*config);
  ASSERT_TRUE(sanitizer.ok());
  EXPECT_EQ(sanitizer->unknown_location,
            UnknownLocationPolicy::kUniformFallback);
  EXPECT_EQ(sanitizer->epsilon.value(), 0.5);
}

TEST(PipelineConfig, RejectsUnknownKeys) {
  auto config = ParsePipelineConfig(R"({"epsilon": 1, "epsilom": 2})");
  ASSERT_FALSE(config.ok());
  EXPECT_THAT(std::string(config.status().message()), HasSubstr("epsilom"));
}

TEST(PipelineConfig, RejectsOutOfRangeValues) {
  for (const char* bad :
       {R"({"epsilon": 0})", R"({"epsilon": -1})", R"({"k": 0})",
        R"({"workers": 0})", R"({"workers": 100000})",
        R"({"geo_threshold_km": 0})", R"({"age_cap": -1})", R"({"seed": -3})",
        R"({"locale": "de"})", R"({"reference_date": "2020-13-01"})",
        R"({"strict": "yes"})", R"({"feature_columns": [1]})", "[1, 2]",
        "not json"}) {
    EXPECT_FALSE(ParsePipelineConfig(bad).ok()) << bad;
  }
}

TEST(PipelineConfig, MissingFileIsNotFound) {
  EXPECT_TRUE(absl::IsNotFound(
      LoadPipelineConfig("/nonexistent/config.json").status()));
}

}  // namespace
}  // namespace deid::tools
