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

#include "deid_commands.h"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/document_sanitizer.h"
#include "deid/epsilon.h"
#include "deid/laplace.h"
#include "deid/location_db.h"
#include "deid/pattern_recognizer.h"
#include "deid/privacy_checks.h"
#include "deid/random_source.h"
#include "deid/sampler_stats.h"
#include "deid/surrogate_pool.h"
#include "fmt/format.h"
#include "json.hpp"

namespace deid::tools {
namespace {

namespace fs = std::filesystem;
using ::nlohmann::ordered_json;

absl::StatusOr<std::string> ReadFile(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    return absl::NotFoundError(fmt::format("cannot open '{}'", path.string()));
  }
  return std::string((std::istreambuf_iterator<char>(file)),
                     std::istreambuf_iterator<char>());
}

absl::StatusOr<std::vector<fs::path>> ListInputs(const std::string& in) {
  if (in.empty()) return absl::InvalidArgumentError("no input given (--in)");
  std::error_code ec;
  if (fs::is_regular_file(in, ec)) return std::vector<fs::path>{in};
  if (!fs::is_directory(in, ec)) {
    return absl::NotFoundError(fmt::format("input '{}' does not exist", in));
  }
  std::vector<fs::path> files;
  for (const fs::directory_entry& entry : fs::directory_iterator(in, ec)) {
    const fs::path& p = entry.path();
    if (!entry.is_regular_file() || p.extension() != ".json") continue;
    files.push_back(p);
  }
  if (ec) {
    return absl::InternalError(
        fmt::format("cannot list '{}': {}", in, ec.message()));
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Doc ids become file names, so keep them to a conservative alphabet.
bool SafeDocId(const std::string& id) {
  if (id.empty() || id[0] == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '.';
  });
}

absl::StatusOr<LocationDb> OpenLocationDb(
    const std::string& path, const std::vector<std::string>& features) {
  std::ifstream file(path);
  if (!file) {
    return absl::NotFoundError(
        fmt::format("cannot open location database '{}'", path));
  }
  absl::StatusOr<LocationDb> db = LoadLocationDb(file, features);
  if (!db.ok()) {
    return absl::Status(
        db.status().code(),
        fmt::format("{}: {}", path, std::string(db.status().message())));
  }
  return db;
}

struct StagedFile {
  fs::path final_path;
  fs::path temp_path;
};

void RemoveStaged(const std::vector<StagedFile>& staged) {
  std::error_code ec;
  for (const StagedFile& f : staged) fs::remove(f.temp_path, ec);
}

absl::Status WriteAll(const fs::path& out_dir,
                      const std::vector<SanitizedDocument>& docs) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) {
    return absl::InternalError(
        fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));
  }
  std::vector<StagedFile> staged;
  auto stage = [&](const std::string& name,
                   const std::string& body) -> absl::Status {
    StagedFile f{out_dir / name, out_dir / ("." + name + ".tmp")};
    std::ofstream file(f.temp_path, std::ios::binary | std::ios::trunc);
    file << body;
    file.close();
    staged.push_back(f);
    if (!file) {
      return absl::InternalError(
          fmt::format("cannot write '{}'", f.temp_path.string()));
    }
    return absl::OkStatus();
  };
  for (const SanitizedDocument& doc : docs) {
    for (absl::Status s :
         {stage(doc.doc_id + ".txt", doc.text),
          stage(doc.doc_id + ".replacements.json", SerializeReplacements(doc)),
          stage(doc.doc_id + ".audit.json", AuditReport(doc))}) {
      if (!s.ok()) {
        RemoveStaged(staged);
        return s;
      }
    }
  }
  for (const StagedFile& f : staged) {
    fs::rename(f.temp_path, f.final_path, ec);
    if (ec) {
      RemoveStaged(staged);
      return absl::InternalError(fmt::format(
          "cannot rename into '{}': {}", f.final_path.string(), ec.message()));
    }
  }
  return absl::OkStatus();
}

}  // namespace

int RunDeid(const PipelineConfig& config, std::ostream& out,
            std::ostream& err) {
  absl::StatusOr<SanitizerConfig> sanitizer = ToSanitizerConfig(config);
  if (!sanitizer.ok()) {
    err << "config error: " << sanitizer.status().message() << "\n";
    return kExitConfigError;
  }
  if (config.out.empty()) {
    err << "config error: no output directory given (--out)\n";
    return kExitConfigError;
  }
  absl::StatusOr<std::vector<fs::path>> inputs = ListInputs(config.in);
  if (!inputs.ok()) {
    err << "config error: " << inputs.status().message() << "\n";
    return kExitConfigError;
  }

  std::vector<AnnotatedDocument> docs;
  std::set<std::string> ids;
  bool has_locations = false;
  for (const fs::path& path : *inputs) {
    absl::StatusOr<std::string> body = ReadFile(path);
    if (!body.ok()) {
      err << "error: " << body.status().message() << "\n";
      return kExitConfigError;
    }
    absl::StatusOr<AnnotatedDocument> doc = ParseAnnotated(*body);
    if (!doc.ok()) {
      err << "error: " << path.string() << ": " << doc.status().message()
          << "\n";
      return kExitConfigError;
    }
    if (!SafeDocId(doc->doc_id())) {
      err << "error: " << path.string()
          << ": doc_id must be non-empty, not start with '.', and use only "
             "[A-Za-z0-9._-]\n";
      return kExitConfigError;
    }
    if (!ids.insert(doc->doc_id()).second) {
      err << "error: " << path.string() << ": duplicate doc_id '"
          << doc->doc_id() << "'\n";
      return kExitConfigError;
    }
    has_locations |= std::any_of(
        doc->spans().begin(), doc->spans().end(),
        [](const EntitySpan& s) { return s.label == EntityLabel::kLoc; });
    docs.push_back(*std::move(doc));
  }

  std::optional<LocationDb> db;
  if (config.locations_db.has_value()) {
    absl::StatusOr<LocationDb> loaded =
        OpenLocationDb(*config.locations_db, config.feature_columns);
    if (!loaded.ok()) {
      err << "config error: " << loaded.status().message() << "\n";
      return kExitConfigError;
    }
    for (const std::string& w : loaded->warnings()) {
      err << "warning: " << w << "\n";
    }
    db = *std::move(loaded);
  } else if (has_locations) {
    err << "config error: LOC spans present but no location database given "
           "(--locations-db)\n";
    return kExitConfigError;
  }

  SurrogatePool pools = SurrogatePool::Default();
  if (config.pools.has_value()) {
    absl::StatusOr<std::string> body = ReadFile(*config.pools);
    absl::StatusOr<SurrogatePool> parsed =
        body.ok() ? SurrogatePool::Parse(*body)
                  : absl::StatusOr<SurrogatePool>(body.status());
    if (!parsed.ok()) {
      err << "config error: pools: " << parsed.status().message() << "\n";
      return kExitConfigError;
    }
    pools = *std::move(parsed);
  }

  // Without a seed, draw one master seed so per-document streams stay
  // independent of scheduling.
  const std::uint64_t master_seed =
      config.seed.value_or(RandomSource::FromEntropy().NextBits());

  std::vector<std::optional<absl::StatusOr<SanitizedDocument>>> results(
      docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      RandomSource rng = RandomSource::ForStream(master_seed, docs[i].doc_id());
      results[i] = SanitizeDocument(docs[i], db ? &*db : nullptr, pools,
                                    *sanitizer, rng);
    }
  };
  {
    const std::size_t n_threads =
        std::min(config.workers, std::max<std::size_t>(docs.size(), 1));
    std::vector<std::jthread> threads;
    for (std::size_t t = 1; t < n_threads; ++t) threads.emplace_back(worker);
    worker();
  }

  std::vector<SanitizedDocument> sanitized;
  std::size_t failures = 0;
  std::size_t replacements = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const absl::StatusOr<SanitizedDocument>& r = *results[i];
    if (!r.ok()) {
      err << "error: document '" << docs[i].doc_id()
          << "': " << r.status().message() << "\n";
      ++failures;
      continue;
    }
    for (const std::string& w : r->warnings) {
      err << "warning: document '" << r->doc_id << "': " << w << "\n";
    }
    replacements += r->replacements.size();
    sanitized.push_back(*r);
  }
  if (failures > 0) {
    err << fmt::format("{} of {} documents failed; nothing written\n", failures,
                       docs.size());
    return kExitFailure;
  }
  if (absl::Status s = WriteAll(config.out, sanitized); !s.ok()) {
    err << "error: " << s.message() << "\n";
    return kExitFailure;
  }
  out << fmt::format("deid: {} documents, {} replacements, epsilon {} -> {}\n",
                     sanitized.size(), replacements, config.epsilon,
                     config.out);
  return kExitOk;
}

namespace {

ordered_json ResultJson(const PrivacyCheckResult& r, bool expect_pass) {
  ordered_json j;
  j["mechanism"] = r.mechanism;
  j["description"] = r.description;
  j["epsilon"] = r.epsilon;
  j["bound_factor"] = r.bound_factor;
  j["worst_excess"] = r.worst_excess;
  j["worst_multiplier"] = r.worst_multiplier;
  j["tolerance"] = r.tolerance;
  j["evaluated"] = r.evaluated;
  j["pass"] = r.pass;
  j["expected"] = expect_pass ? "pass" : "fail";
  return j;
}

// Points on a line in unnormalized space: pairwise distances up to 3, where
// the squared-distance score breaks the triangle step.
std::vector<std::vector<double>> StretchedLineDistances() {
  const std::vector<double> xs = {0.0, 0.5, 1.0, 2.0, 3.0};
  std::vector<std::vector<double>> d(xs.size(), std::vector<double>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j)
      d[i][j] = std::abs(xs[i] - xs[j]);
  }
  return d;
}

}  // namespace

int RunVerify(const VerifyOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.epsilons.empty()) {
    err << "config error: no epsilon values given\n";
    return kExitConfigError;
  }
  std::vector<Epsilon> epsilons;
  for (double e : options.epsilons) {
    absl::StatusOr<Epsilon> eps = Epsilon::Create(e);
    if (!eps.ok()) {
      err << "config error: " << eps.status().message() << "\n";
      return kExitConfigError;
    }
    epsilons.push_back(*eps);
  }
  if (!(options.exp_bound_factor >= 1.0) ||
      !std::isfinite(options.exp_bound_factor)) {
    err << "config error: --exp-bound-factor must be finite and >= 1\n";
    return kExitConfigError;
  }
  if (options.sampler_draws < kMinSamplerDraws) {
    err << fmt::format("config error: sampler draws must be >= {}\n",
                       kMinSamplerDraws);
    return kExitConfigError;
  }
  std::optional<LocationDb> db;
  if (options.locations_db.has_value()) {
    absl::StatusOr<LocationDb> loaded =
        OpenLocationDb(*options.locations_db, options.feature_columns);
    if (!loaded.ok()) {
      err << "config error: " << loaded.status().message() << "\n";
      return kExitConfigError;
    }
    db = *std::move(loaded);
  } else {
    db = DefaultVerificationDb();
  }
  if (db->size() > kMaxExhaustivePlaces) {
    err << fmt::format(
        "config error: exhaustive check supports at most {} places, database "
        "has {}; use a smaller database\n",
        kMaxExhaustivePlaces, db->size());
    return kExitConfigError;
  }

  const bool neg = options.negative_control;
  const ProductGrid grid = DefaultLaplaceGrid();
  const std::vector<std::vector<double>> distances = DistanceMatrix(*db);
  const std::vector<std::vector<double>> stretched = StretchedLineDistances();
  ordered_json report;
  report["negative_control_injected"] = neg;
  report["checks"] = ordered_json::array();
  bool all_ok = true;

  auto record = [&](const PrivacyCheckResult& r, bool expect_pass) {
    const bool ok = r.pass == expect_pass;
    all_ok &= ok;
    out << fmt::format(
        "{:<4} {:<28} eps={:<5g} worst_excess={:.3e} worst_ratio={:.4f} "
        "(expected {})\n",
        ok ? "ok" : "FAIL", r.mechanism, r.epsilon, r.worst_excess,
        r.worst_multiplier, expect_pass ? "pass" : "fail");
    report["checks"].push_back(ResultJson(r, expect_pass));
  };

  for (Epsilon eps : epsilons) {
    // The mechanism under test must pass; with the control injected it is
    // replaced by the Gaussian variant, so the run fails.
    record(
        neg ? CheckGaussianControl(eps, grid) : CheckLaplaceDPrivacy(eps, grid),
        true);
    absl::StatusOr<PrivacyCheckResult> exp = CheckExponentialDPrivacy(
        neg ? stretched : distances, eps,
        neg ? ScoreFunction(SquaredDistanceScore)
            : ScoreFunction(StandardScore),
        options.exp_bound_factor,
        neg ? "exponential/squared-score" : "exponential");
    if (!exp.ok()) {
      err << "error: " << exp.status().message() << "\n";
      return kExitFailure;
    }
    record(*exp, true);
    if (!neg) {
      // Power checks: the broken variants must be rejected.
      record(CheckGaussianControl(eps, grid), false);
      absl::StatusOr<PrivacyCheckResult> sq = CheckExponentialDPrivacy(
          stretched, eps, SquaredDistanceScore, options.exp_bound_factor,
          "exponential/squared-score");
      if (!sq.ok()) {
        err << "error: " << sq.status().message() << "\n";
        return kExitFailure;
      }
      record(*sq, false);
    }
  }

  RandomSource rng(options.seed);
  absl::StatusOr<SamplerReport> sampler =
      CheckSampler(1.0, options.sampler_draws, rng);
  if (!sampler.ok()) {
    err << "error: " << sampler.status().message() << "\n";
    return kExitFailure;
  }
  all_ok &= sampler->pass;
  out << fmt::format(
      "{:<4} {:<28} n={} ks={:.5f} (crit {:.5f}) mean={:.5f} var={:.5f} "
      "(expect {:.1f})\n",
      sampler->pass ? "ok" : "FAIL", "laplace-sampler", sampler->n,
      sampler->ks_statistic, sampler->ks_critical, sampler->mean,
      sampler->variance, sampler->expected_variance);
  report["sampler"] = {{"n", sampler->n},
                       {"scale", sampler->scale},
                       {"ks_statistic", sampler->ks_statistic},
                       {"ks_critical", sampler->ks_critical},
                       {"mean", sampler->mean},
                       {"variance", sampler->variance},
                       {"expected_variance", sampler->expected_variance},
                       {"pass", sampler->pass}};
  report["pass"] = all_ok;

  if (options.report_path.has_value()) {
    std::ofstream file(*options.report_path, std::ios::trunc);
    file << report.dump(2) << "\n";
    if (!file) {
      err << "error: cannot write report '" << *options.report_path << "'\n";
      return kExitFailure;
    }
  }
  out << (all_ok ? "verify: all checks behaved as expected\n"
                 : "verify: FAILED\n");
  return all_ok ? kExitOk : kExitFailure;
}

int RunRecognize(const std::string& input_path, const std::string& doc_id,
                 const LocaleConfig& locale, std::ostream& out,
                 std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(input_path);
  if (!text.ok()) {
    err << "error: " << text.status().message() << "\n";
    return kExitConfigError;
  }
  absl::StatusOr<AnnotatedDocument> doc =
      AnnotatedDocument::Create(doc_id, *text, PatternRecognize(*text, locale));
  if (!doc.ok()) {
    err << "error: " << doc.status().message() << "\n";
    return kExitFailure;
  }
  out << SerializeAnnotated(*doc);
  return kExitOk;
}

int RunInspectDb(const std::string& path,
                 const std::vector<std::string>& feature_columns,
                 std::ostream& out, std::ostream& err) {
  absl::StatusOr<LocationDb> db = OpenLocationDb(path, feature_columns);
  if (!db.ok()) {
    err << "error: " << db.status().message() << "\n";
    return kExitConfigError;
  }
  out << fmt::format("{}: {} places, {} features\n", path, db->size(),
                     db->feature_names().size());
  for (std::size_t f = 0; f < db->feature_names().size(); ++f) {
    out << fmt::format("  {:<24} min={:<12g} max={:g}\n",
                       db->feature_names()[f], db->bounds()[f].min,
                       db->bounds()[f].max);
  }
  for (const std::string& w : db->warnings()) out << "  warning: " << w << "\n";
  return kExitOk;
}

}  // namespace deid::tools
