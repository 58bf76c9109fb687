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

#include "deid/laplace.h"

#include <cmath>
#include <vector>

#include "deid/epsilon.h"
#include "deid/random_source.h"
#include "gtest/gtest.h"

namespace deid {
namespace {

TEST(Epsilon, RejectsNonPositiveAndNonFinite) {
  EXPECT_TRUE(Epsilon::Create(0.25).ok());
  EXPECT_FALSE(Epsilon::Create(0).ok());
  EXPECT_FALSE(Epsilon::Create(-1).ok());
  EXPECT_FALSE(Epsilon::Create(INFINITY).ok());
  EXPECT_FALSE(Epsilon::Create(NAN).ok());
}

TEST(LaplaceInverseCdf, ClosedFormPoints) {
  EXPECT_EQ(LaplaceInverseCdf(0.5, 1.0), 0.0);
  EXPECT_NEAR(LaplaceInverseCdf(0.75, 2.0), 2.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(LaplaceInverseCdf(0.25, 2.0), -2.0 * std::log(2.0), 1e-12);
}

TEST(LaplaceInverseCdf, InvertsCdf) {
  for (double u : {1e-12, 0.01, 0.3, 0.5, 0.7, 0.99, 1 - 1e-12}) {
    EXPECT_NEAR(LaplaceCdf(LaplaceInverseCdf(u, 3.0), 3.0), u, 1e-12);
  }
}

TEST(LaplaceLogDensity, MatchesFormula) {
  const double b = 4.0;
  EXPECT_NEAR(LaplaceLogDensity(0, b), -std::log(2 * b), 1e-15);
  EXPECT_NEAR(LaplaceLogDensity(-6, b), -std::log(2 * b) - 1.5, 1e-15);
}

TEST(SampleLaplace, RejectsBadScale) {
  RandomSource rng(1);
  EXPECT_FALSE(SampleLaplace(0, rng).ok());
  EXPECT_FALSE(SampleLaplace(-2, rng).ok());
  EXPECT_FALSE(SampleLaplace(NAN, rng).ok());
}

TEST(SampleLaplace, VarianceOfAMillionDraws) {
  for (double b : {0.5, 2.0}) {
    RandomSource rng(99);
    const int n = 1000000;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < n; ++i) {
      const double x = *SampleLaplace(b, rng);
      sum += x;
      sum_sq += x * x;
    }
    const double mean = sum / n;
    const double variance = sum_sq / n - mean * mean;
    EXPECT_NEAR(variance / (2 * b * b), 1.0, 0.02) << "scale " << b;
  }
}

TEST(RandomSource, MatchesMt19937_64Reference) {
  // 10000th output for the default seed, as required of std::mt19937_64.
  RandomSource rng(5489);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.NextBits();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RandomSource, OpenUniformNeverHitsEndpoints) {
  RandomSource rng(3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.NextOpenUniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomSource, StreamsAreDeterministicAndDistinct) {
  RandomSource a = RandomSource::ForStream(42, "doc-a");
  RandomSource a2 = RandomSource::ForStream(42, "doc-a");
  RandomSource b = RandomSource::ForStream(42, "doc-b");
  const std::uint64_t first = a.NextBits();
  EXPECT_EQ(first, a2.NextBits());
  EXPECT_NE(first, b.NextBits());
  EXPECT_NE(DeriveStreamSeed(1, "x"), DeriveStreamSeed(2, "x"));
}

TEST(RandomSource, NextIndexInRange) {
  RandomSource rng(8);
  std::vector<int> counts(7);
  for (int i = 0; i < 70000; ++i) ++counts[rng.NextIndex(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

}  // namespace
}  // namespace deid
