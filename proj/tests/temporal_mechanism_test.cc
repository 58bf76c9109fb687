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

#include "deid/temporal_mechanism.h"

#include <algorithm>
#include <vector>

#include "deid/random_source.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace deid {
namespace {

using ::testing::ElementsAre;

TemporalEntity Years(std::int64_t n) {
  return {TemporalKind::kRelative, n, Granularity::kYear, {}};
}

TEST(SanitizeTemporal, KeepsKindGranularityAndFormat) {
  TemporalEntity in = Years(40);
  in.format.pattern = TemporalPattern::kDuration;
  in.format.language = Language::kEnglish;
  RandomSource rng(17);
  const TemporalEntity out = SanitizeTemporal(in, *Epsilon::Create(0.25), rng);
  EXPECT_EQ(out.kind, in.kind);
  EXPECT_EQ(out.granularity, in.granularity);
  EXPECT_EQ(out.format, in.format);
  EXPECT_GE(out.magnitude, 0);
}

TEST(SanitizeTemporal, HugeBudgetReturnsInput) {
  RandomSource rng(5);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(SanitizeTemporal(Years(40), *Epsilon::Create(1e6), rng).magnitude,
              40);
  }
}

TEST(SanitizeTemporal, ClampsAtZero) {
  RandomSource rng(11);
  for (int i = 0; i < 2000; ++i) {
    EXPECT_GE(SanitizeTemporal(Years(0), *Epsilon::Create(0.01), rng).magnitude,
              0);
  }
}

TEST(SanitizeTemporal, NoiseIsCentered) {
  RandomSource rng(23);
  double total = 0;
  const int n = 50000;
  for (int i = 0; i < n; ++i) {
    total += static_cast<double>(
        SanitizeTemporal(Years(1000), *Epsilon::Create(0.5), rng).magnitude);
  }
  // Standard error of the mean: sqrt(2 * 2^2 / n) ≈ 0.0126.
  EXPECT_NEAR(total / n, 1000.0, 0.06);
}

TEST(RestoreOrder, PermutesToOriginalRanks) {
  const std::vector<std::int64_t> originals = {300, 10, 150};
  std::vector<std::int64_t> sanitized = {5, 400, 160};
  RestoreOrder(originals, sanitized);
  EXPECT_THAT(sanitized, ElementsAre(400, 5, 160));
}

TEST(RestoreOrder, SeparatesTies) {
  const std::vector<std::int64_t> originals = {30, 20, 10};
  std::vector<std::int64_t> sanitized = {7, 7, 7};
  RestoreOrder(originals, sanitized);
  EXPECT_THAT(sanitized, ElementsAre(9, 8, 7));
}

TEST(RestoreOrder, RandomizedRanksMatch) {
  RandomSource rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.NextIndex(8);
    std::vector<std::int64_t> originals;
    while (originals.size() < n) {
      const auto v = static_cast<std::int64_t>(rng.NextIndex(1000));
      if (std::find(originals.begin(), originals.end(), v) == originals.end()) {
        originals.push_back(v);
      }
    }
    std::vector<std::int64_t> sanitized(n);
    for (auto& s : sanitized) {
      s = static_cast<std::int64_t>(rng.NextIndex(50));
    }
    RestoreOrder(originals, sanitized);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(originals[i] < originals[j], sanitized[i] < sanitized[j]);
      }
    }
  }
}

}  // namespace
}  // namespace deid
