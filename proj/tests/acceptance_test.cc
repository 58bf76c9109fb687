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

// Acceptance suite: one PASS/FAIL line per criterion, plus informational
// lines. Criteria 1 and 7 (containment half) cannot hold for a mechanism
// with the stated properties; they are measured as specified and reported
// as failures. The process exits 0 only when the set of failing criteria is
// exactly that known set, so any regression, or an unexpected pass, fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "deid/budget.h"
#include "deid/document_sanitizer.h"
#include "deid/exponential_mechanism.h"
#include "deid/privacy_checks.h"
#include "deid/random_source.h"
#include "deid/sampler_stats.h"
#include "deid/temporal.h"
#include "deid/temporal_mechanism.h"
#include "fmt/format.h"
#include "test_support.h"

namespace deid {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using ::deid::testing::DataPath;
using ::deid::testing::LoadFixture;
using ::deid::testing::ReadText;
using ::deid::testing::RegionDb;
using ::deid::testing::ThreadLocale;

// Tolerances and limits, pinned here.
constexpr double kAnalyticTol = 1e-9;
constexpr double kEq4Tol = 1e-5;
constexpr double kSumTol = 1e-12;
constexpr double kExpSeconds = 1.0;
constexpr double kLaplaceSeconds = 10.0;
constexpr double kSamplerSeconds = 5.0;
constexpr int kSeededRuns = 100;
constexpr int kOrderDocs = 1000;
constexpr int kConcentrationTrials = 1000;
constexpr int kConcentrationMin = 999;

// Direct evaluation of exp(1 - d) / sum for d = (0, 0.2, 0.5), computed in
// Python (tests/oracles) and frozen.
constexpr double kEq4Oracle[3] = {0.4123266855795783, 0.33758453779871644,
                                  0.25008877662170526};
constexpr double kEq4Printed[3] = {0.41233, 0.33756, 0.25011};

const std::set<int> kKnownUnattainable = {1, 7};

std::map<int, bool> results;

void Report(int id, bool pass, const std::string& what) {
  results[id] = pass;
  fmt::print("[{}] criterion {:>2}: {}\n", pass ? "PASS" : "FAIL", id, what);
}

void Info(const std::string& what) { fmt::print("       info: {}\n", what); }

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Epsilon Eps(double e) { return *Epsilon::Create(e); }

SanitizerConfig ThreadConfig() {
  SanitizerConfig config;
  config.locale = ThreadLocale();
  return config;
}

void Criterion1() {
  const LocationDb db = DefaultVerificationDb();
  const auto start = Clock::now();
  bool pass = true;
  double worst = -INFINITY;
  std::vector<PrivacyCheckResult> strict;
  for (double e : {0.1, 1.0, 5.0}) {
    absl::StatusOr<PrivacyCheckResult> r = CheckExponentialDPrivacy(db, Eps(e));
    if (!r.ok()) {
      Report(1, false,
             fmt::format("check error: {}", std::string(r.status().message())));
      return;
    }
    pass &= r->worst_excess <= kAnalyticTol;
    worst = std::max(worst, r->worst_excess);
    strict.push_back(*r);
  }
  const double elapsed = Seconds(start);
  pass &= elapsed <= kExpSeconds;
  Report(1, pass,
         fmt::format("exponential mechanism, 10 places x 3 features, "
                     "eps in {{0.1,1,5}}: worst excess over eps*d = {:.4g} "
                     "(tol {:g}), {:.3f}s",
                     worst, kAnalyticTol, elapsed));
  for (const PrivacyCheckResult& r : strict) {
    Info(
        fmt::format("eps={:<4g} worst excess {:.4g}, worst |log ratio| / "
                    "(eps*d) = {:.4f}",
                    r.epsilon, r.worst_excess, r.worst_multiplier));
  }
  bool doubled_ok = true;
  for (double e : {0.1, 1.0, 5.0}) {
    auto r = CheckExponentialDPrivacy(DistanceMatrix(db), Eps(e), StandardScore,
                                      2.0);
    doubled_ok &= r.ok() && r->pass;
  }
  Info(fmt::format(
      "the normaliser depends on the origin, so only 2*eps*d is guaranteed; "
      "2*eps*d bound {} on the same fixture",
      doubled_ok ? "holds" : "ALSO FAILS"));
}

void Criterion2() {
  const ProductGrid grid = DefaultLaplaceGrid();
  const auto start = Clock::now();
  const PrivacyCheckResult laplace = CheckLaplaceDPrivacy(Eps(1.0), grid);
  const double elapsed = Seconds(start);
  const PrivacyCheckResult gauss = CheckGaussianControl(Eps(1.0), grid);
  const bool pass = laplace.pass && laplace.worst_excess <= kAnalyticTol &&
                    laplace.evaluated == 101u * 101u * 101u &&
                    elapsed <= kLaplaceSeconds && !gauss.pass;
  Report(2, pass,
         fmt::format("Laplace density bound on {} triples: worst excess "
                     "{:.3g} (tol {:g}), {:.3f}s; Gaussian control {} "
                     "(excess {:.4g})",
                     laplace.evaluated, laplace.worst_excess, kAnalyticTol,
                     elapsed, gauss.pass ? "PASSED (bad)" : "fails",
                     gauss.worst_excess));
}

std::vector<double> Eq4(const std::vector<double>& distances, double eps) {
  CandidateSet set;
  set.requested_k = distances.size();
  for (std::size_t i = 0; i < distances.size(); ++i) {
    set.entries.push_back({i, distances[i]});
  }
  return LocationDistribution(set, Eps(eps)).probabilities;
}

void Criterion3() {
  const std::vector<double> p = Eq4({0, 0.2, 0.5}, 1.0);
  double value_err = 0, printed_err = 0;
  for (int i = 0; i < 3; ++i) {
    value_err = std::max(value_err, std::abs(p[i] - kEq4Oracle[i]));
    printed_err = std::max(printed_err, std::abs(p[i] - kEq4Printed[i]));
  }
  RandomSource rng(3);
  double sum_err = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<double> d = {0};
    const std::size_t n = 1 + rng.NextIndex(30);
    for (std::size_t i = 0; i < n; ++i) d.push_back(2 * rng.NextOpenUniform());
    const auto q = Eq4(d, 0.01 + 10 * rng.NextOpenUniform());
    sum_err = std::max(sum_err,
                       std::abs(std::accumulate(q.begin(), q.end(), 0.0) - 1));
  }
  Report(3, value_err <= kEq4Tol && sum_err <= kSumTol,
         fmt::format("(0,0.2,0.5) at eps=1 -> ({:.6f}, {:.6f}, {:.6f}), max "
                     "error vs formula oracle {:.2g} (tol {:g}); 1000 random "
                     "sets sum to 1 within {:.2g} (tol {:g})",
                     p[0], p[1], p[2], value_err, kEq4Tol, sum_err, kSumTol));
  Info(
      fmt::format("max gap to the 5-digit reference triple (0.41233, "
                  "0.33756, 0.25011) is {:.2g}; that triple is itself off "
                  "from exp(1-d)/sum in the 5th digit",
                  printed_err));
}

void Criterion4() {
  RandomSource rng(20200226);
  const auto start = Clock::now();
  absl::StatusOr<SamplerReport> r = CheckSampler(1.0, 100000, rng);
  const double elapsed = Seconds(start);
  if (!r.ok()) {
    Report(4, false, std::string(r.status().message()));
    return;
  }
  const bool pass = r->ks_pass && r->variance_relative_error <= 0.02 &&
                    elapsed <= kSamplerSeconds;
  Report(4, pass,
         fmt::format("10^5 Laplace(1) draws: KS {:.5f} < {:.5f} (1%), "
                     "variance {:.4f} vs 2 ({:.2f}% off, tol 2%), {:.3f}s",
                     r->ks_statistic, r->ks_critical, r->variance,
                     100 * r->variance_relative_error, elapsed));
}

void Criterion5() {
  const AnnotatedDocument doc = LoadFixture("thread_example");
  bool pass = true;
  std::size_t keys = 0;
  for (double total : {1.0, 0.5, 2.0}) {
    const BudgetLedger ledger = AllocateBudget(doc, Eps(total), ThreadLocale());
    keys = ledger.shares().size();
    pass &= keys == 4;
    for (const auto& [key, share] : ledger.shares()) {
      // Exact: total/4 is representable for these totals.
      pass &= share.value() == total / 4 && share.value() * 4 == total;
    }
  }
  Report(5, pass,
         fmt::format("thread example: {} DP keys, each exactly eps/4 "
                     "(eps = 1, 0.5, 2)",
                     keys));
}

void Criterion6() {
  const AnnotatedDocument doc = LoadFixture("thread_example");
  const LocationDb db = RegionDb();
  const SurrogatePool pools = SurrogatePool::Default();
  int consistent = 0;
  std::set<std::string> seen;
  for (int seed = 0; seed < kSeededRuns; ++seed) {
    RandomSource rng(static_cast<std::uint64_t>(seed));
    auto out = SanitizeDocument(doc, &db, pools, ThreadConfig(), rng);
    if (!out.ok()) continue;
    std::vector<std::string> dijon;
    for (std::size_t i = 0; i < doc.spans().size(); ++i) {
      if (doc.spans()[i].label == EntityLabel::kLoc) {
        dijon.push_back(out->replacements[i].surrogate);
      }
    }
    if (dijon.size() == 2 && dijon[0] == dijon[1]) ++consistent;
    seen.insert(dijon.front());
  }
  Report(6, consistent == kSeededRuns,
         fmt::format("both Dijon occurrences identical in {}/{} seeded runs "
                     "({} distinct surrogate cities seen)",
                     consistent, kSeededRuns, seen.size()));
}

void Criterion7() {
  const AnnotatedDocument doc = LoadFixture("thread_example");
  const LocationDb db = RegionDb();
  const SurrogatePool pools = SurrogatePool::Default();
  int format_ok = 0;
  int clean = 0;
  std::map<std::string, int> leaks;
  for (int seed = 0; seed < kSeededRuns; ++seed) {
    RandomSource rng(static_cast<std::uint64_t>(seed));
    auto out = SanitizeDocument(doc, &db, pools, ThreadConfig(), rng);
    if (!out.ok()) continue;
    bool formats = true;
    for (std::size_t i = 0; i < doc.spans().size(); ++i) {
      const EntitySpan& span = doc.spans()[i];
      if (span.label != EntityLabel::kDate) continue;
      auto original = ParseTemporal(span.surface, span.label, ThreadLocale());
      auto surrogate = ParseTemporal(out->replacements[i].surrogate, span.label,
                                     ThreadLocale());
      formats &= original.ok() && surrogate.ok() &&
                 original->format.pattern == surrogate->format.pattern;
    }
    format_ok += formats;
    bool leaked = false;
    for (const EntitySpan& span : doc.spans()) {
      if (!IsDpLabel(span.label) || span.surface.size() < 3) continue;
      if (out->text.find(span.surface) != std::string::npos) {
        ++leaks[span.surface];
        leaked = true;
      }
    }
    clean += !leaked;
  }
  std::string leak_text;
  for (const auto& [surface, n] : leaks) {
    leak_text +=
        fmt::format("{}'{}' x{}", leak_text.empty() ? "" : ", ", surface, n);
  }
  Report(7, format_ok == kSeededRuns && clean == kSeededRuns,
         fmt::format("format kept in {}/{} runs; text free of original DP "
                     "surfaces in {}/{} runs",
                     format_ok, kSeededRuns, clean, kSeededRuns));
  Info(fmt::format("surfaces re-drawn by the mechanisms: {}",
                   leak_text.empty() ? "none" : leak_text));
  Info(
      "returning the input with positive probability is required for "
      "eps*d-privacy (and by criterion 10); non-DP labels never reappear");
}

int RunCli(const std::string& args) {
  const std::string command =
      std::string(DEID_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  return std::system(command.c_str());
}

std::map<std::string, std::string> Snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  if (!fs::exists(dir)) return files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    files[entry.path().filename().string()] = ReadText(entry.path());
  }
  return files;
}

void Criterion8() {
  const fs::path root = fs::temp_directory_path() / "deid_acceptance_c8";
  fs::remove_all(root);
  auto args = [&](const char* out, int workers) {
    return fmt::format(
        "deid --in {} --out {} --seed 2020 --locale en --day-month-order dmy "
        "--reference-date 2020-12-31 --locations-db {} --workers {}",
        DataPath("corpus"), (root / out).string(), DataPath("bfc_cities.csv"),
        workers);
  };
  const int rc = RunCli(args("w1a", 1)) | RunCli(args("w1b", 1)) |
                 RunCli(args("w4", 4)) | RunCli(args("w2", 2));
  const auto a = Snapshot(root / "w1a");
  const bool pass = rc == 0 && !a.empty() && a == Snapshot(root / "w1b") &&
                    a == Snapshot(root / "w4") && a == Snapshot(root / "w2");
  Report(8, pass,
         fmt::format("deid on the fixture corpus: {} output files, identical "
                     "across two runs and workers 1/2/4",
                     a.size()));
  fs::remove_all(root);
}

void Criterion9() {
  RandomSource gen(909);
  const SurrogatePool pools = SurrogatePool::Default();
  SanitizerConfig config = ThreadConfig();
  config.restore_order = true;
  int matched = 0;
  for (int d = 0; d < kOrderDocs; ++d) {
    // 2-6 distinct dates in 2019-2020, numeric or ISO, shuffled order.
    const std::size_t n = 2 + gen.NextIndex(5);
    std::set<std::int64_t> magnitudes;
    while (magnitudes.size() < n) {
      magnitudes.insert(static_cast<std::int64_t>(gen.NextIndex(700)));
    }
    std::vector<std::int64_t> order(magnitudes.begin(), magnitudes.end());
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[gen.NextIndex(i)]);
    }
    std::string text;
    std::vector<EntitySpan> spans;
    for (std::int64_t m : order) {
      TemporalEntity e{TemporalKind::kAbsoluteDate, m, Granularity::kDay, {}};
      e.format.pattern = gen.NextIndex(2) ? TemporalPattern::kIsoDate
                                          : TemporalPattern::kNumericDate;
      const std::string surface =
          *RenderTemporal(e, config.locale.reference_date);
      text += "Seen on ";
      const auto start = static_cast<std::int64_t>(text.size());
      text += surface;
      spans.push_back({start, static_cast<std::int64_t>(text.size()),
                       EntityLabel::kDate, surface});
      text += ". ";
    }
    auto doc = AnnotatedDocument::Create(fmt::format("o{}", d), text, spans);
    RandomSource rng(static_cast<std::uint64_t>(d));
    auto out = doc.ok() ? SanitizeDocument(*doc, nullptr, pools, config, rng)
                        : absl::StatusOr<SanitizedDocument>(doc.status());
    if (!out.ok()) continue;
    std::vector<std::int64_t> after;
    for (const Replacement& r : out->replacements) {
      auto e = ParseTemporal(r.surrogate, EntityLabel::kDate, config.locale);
      after.push_back(e.ok() ? e->magnitude : -1);
    }
    bool same = true;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        same &= (order[i] < order[j]) == (after[i] < after[j]);
      }
    }
    matched += same;
  }
  Report(9, matched == kOrderDocs,
         fmt::format("--restore-order: date ranks preserved in {}/{} random "
                     "multi-date documents",
                     matched, kOrderDocs));
}

void Criterion10() {
  const Epsilon huge = Eps(1e6);
  RandomSource rng(10);
  int temporal = 0;
  const TemporalEntity age{TemporalKind::kRelative, 40, Granularity::kYear, {}};
  const TemporalEntity date{
      TemporalKind::kAbsoluteDate, 323, Granularity::kDay, {}};
  for (int t = 0; t < kConcentrationTrials; ++t) {
    const TemporalEntity& e = t % 2 ? age : date;
    temporal += SanitizeTemporal(e, huge, rng).magnitude == e.magnitude;
  }
  const LocationDb db = RegionDb();
  const std::size_t dijon = *db.FindByName("Dijon");
  int location = 0;
  for (int t = 0; t < kConcentrationTrials; ++t) {
    auto pick = SanitizeLocation(db, dijon, huge, 10, 100.0, rng);
    location += pick.ok() && *pick == dijon;
  }
  Report(10, temporal >= kConcentrationMin && location >= kConcentrationMin,
         fmt::format("eps_share=1e6: temporal unchanged {}/{}, location = "
                     "origin {}/{} (need >= {})",
                     temporal, kConcentrationTrials, location,
                     kConcentrationTrials, kConcentrationMin));
}

}  // namespace
}  // namespace deid

int main() {
  using namespace deid;
  const std::vector<std::function<void()>> criteria = {
      Criterion1, Criterion2, Criterion3, Criterion4, Criterion5,
      Criterion6, Criterion7, Criterion8, Criterion9, Criterion10};
  for (const auto& c : criteria) c();

  std::set<int> failed;
  for (const auto& [id, pass] : results) {
    if (!pass) failed.insert(id);
  }
  fmt::print("\n{}/{} criteria pass.", results.size() - failed.size(),
             results.size());
  if (failed == kKnownUnattainable) {
    fmt::print(" Failing: 1 and 7 (unattainable as stated; see README).\n");
    return 0;
  }
  fmt::print(" Failing set differs from the known set {{1, 7}}:");
  for (int id : failed) fmt::print(" {}", id);
  fmt::print("\n");
  return 1;
}
