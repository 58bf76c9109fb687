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

#include <benchmark/benchmark.h>

#include "deid/document_sanitizer.h"
#include "deid/exponential_mechanism.h"
#include "deid/laplace.h"
#include "deid/pattern_recognizer.h"
#include "deid/privacy_checks.h"
#include "deid/temporal.h"
#include "deid/temporal_mechanism.h"
#include "test_support.h"

namespace deid {
namespace {

void BM_SampleLaplace(benchmark::State& state) {
  RandomSource rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(*SampleLaplace(2.0, rng));
}
BENCHMARK(BM_SampleLaplace);

void BM_SanitizeTemporal(benchmark::State& state) {
  RandomSource rng(1);
  const TemporalEntity e{
      TemporalKind::kAbsoluteDate, 323, Granularity::kDay, {}};
  const Epsilon eps = *Epsilon::Create(0.25);
  for (auto _ : state) benchmark::DoNotOptimize(SanitizeTemporal(e, eps, rng));
}
BENCHMARK(BM_SanitizeTemporal);

void BM_ParseTemporal(benchmark::State& state) {
  const LocaleConfig locale = testing::ThreadLocale();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ParseTemporal("February 26, 2020", EntityLabel::kDate, locale));
  }
}
BENCHMARK(BM_ParseTemporal);

void BM_SanitizeLocation(benchmark::State& state) {
  const LocationDb db = testing::RegionDb();
  RandomSource rng(1);
  const Epsilon eps = *Epsilon::Create(0.25);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        *SanitizeLocation(db, 0, eps, k, kNoGeoThreshold, rng));
  }
}
BENCHMARK(BM_SanitizeLocation)->Arg(1)->Arg(5)->Arg(10)->Arg(16);

void BM_SanitizeThreadExample(benchmark::State& state) {
  const AnnotatedDocument doc = testing::LoadFixture("thread_example");
  const LocationDb db = testing::RegionDb();
  const SurrogatePool pools = SurrogatePool::Default();
  SanitizerConfig config;
  config.locale = testing::ThreadLocale();
  RandomSource rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SanitizeDocument(doc, &db, pools, config, rng));
  }
}
BENCHMARK(BM_SanitizeThreadExample);

void BM_PatternRecognize(benchmark::State& state) {
  const AnnotatedDocument doc = testing::LoadFixture("fr_admission");
  LocaleConfig locale = testing::ThreadLocale();
  locale.language = Language::kFrench;
  for (auto _ : state) {
    benchmark::DoNotOptimize(PatternRecognize(doc.text(), locale));
  }
}
BENCHMARK(BM_PatternRecognize);

void BM_LaplaceGridCheck(benchmark::State& state) {
  const ProductGrid grid = DefaultLaplaceGrid();
  const Epsilon eps = *Epsilon::Create(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(CheckLaplaceDPrivacy(eps, grid));
}
BENCHMARK(BM_LaplaceGridCheck)->Unit(benchmark::kMillisecond);

void BM_ExponentialExhaustiveCheck(benchmark::State& state) {
  const LocationDb db = DefaultVerificationDb();
  const Epsilon eps = *Epsilon::Create(1);
  for (auto _ : state)
    benchmark::DoNotOptimize(CheckExponentialDPrivacy(db, eps));
}
BENCHMARK(BM_ExponentialExhaustiveCheck)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace deid

BENCHMARK_MAIN();
