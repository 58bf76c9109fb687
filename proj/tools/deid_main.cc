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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deid/locale.h"
#include "deid_commands.h"
#include "pipeline_config.h"

namespace {

using deid::tools::PipelineConfig;

// CLI11 validators return an empty string on success.
std::string CheckLanguage(const std::string& s) {
  return deid::ParseLanguage(s).ok() ? "" : "expected 'fr' or 'en'";
}
std::string CheckOrder(const std::string& s) {
  return deid::ParseDayMonthOrder(s).ok() ? "" : "expected 'dmy' or 'mdy'";
}
std::string CheckDate(const std::string& s) {
  return deid::ParseIsoDate(s).ok() ? "" : "expected YYYY-MM-DD";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surrogate generation for annotated clinical text"};
  app.require_subcommand(1);

  // deid
  CLI::App* deid_cmd =
      app.add_subcommand("deid", "Sanitize annotated documents");
  std::string config_path;
  double epsilon = 0;
  std::uint64_t seed = 0;
  std::string reference_date, locale, order, locations_db, pools, in, out;
  std::vector<std::string> features;
  std::size_t k = 0, workers = 0;
  double geo_km = 0;
  std::int64_t age_cap = 0;
  bool restore_order = false, strict = false, lenient = false;
  deid_cmd->add_option("--config", config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);
  auto* o_eps =
      deid_cmd->add_option("--epsilon", epsilon, "Total budget per document");
  auto* o_seed = deid_cmd->add_option("--seed", seed, "Master seed");
  auto* o_ref = deid_cmd
                    ->add_option("--reference-date", reference_date,
                                 "Date relative phrases resolve against")
                    ->check(CheckDate);
  auto* o_loc = deid_cmd->add_option("--locale", locale, "fr or en")
                    ->check(CheckLanguage);
  auto* o_ord = deid_cmd->add_option("--day-month-order", order, "dmy or mdy")
                    ->check(CheckOrder);
  auto* o_db =
      deid_cmd->add_option("--locations-db", locations_db, "Location CSV");
  auto* o_feat = deid_cmd->add_option("--features", features, "Feature columns")
                     ->delimiter(',');
  auto* o_k = deid_cmd->add_option("--k", k, "Candidate set size");
  auto* o_geo = deid_cmd->add_option("--geo-threshold-km", geo_km,
                                     "Candidate radius in km");
  auto* o_rest = deid_cmd->add_flag("--restore-order", restore_order,
                                    "Keep the relative order of dates");
  auto* o_cap = deid_cmd->add_option("--age-cap", age_cap,
                                     "Upper bound on ages in years");
  auto* o_strict =
      deid_cmd->add_flag("--strict", strict, "Fail on unknown places or dates");
  auto* o_len =
      deid_cmd->add_flag("--lenient", lenient, "Fall back instead of failing");
  o_strict->excludes(o_len);
  auto* o_work =
      deid_cmd->add_option("--workers", workers, "Parallel documents");
  auto* o_pools =
      deid_cmd->add_option("--pools", pools, "Surrogate name pools (JSON)");
  auto* o_in = deid_cmd->add_option("--in", in, "Input file or directory");
  auto* o_out = deid_cmd->add_option("--out", out, "Output directory");

  // verify
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check the privacy inequalities");
  deid::tools::VerifyOptions vopts;
  std::string report, vdb;
  std::vector<std::string> vfeatures;
  verify_cmd->add_option("--epsilon", vopts.epsilons, "Budgets to check")
      ->delimiter(',')
      ->capture_default_str();
  verify_cmd->add_flag("--negative-control", vopts.negative_control,
                       "Swap in broken mechanisms; the run must fail");
  verify_cmd
      ->add_option("--exp-bound-factor", vopts.exp_bound_factor,
                   "Multiplier on the exponential bound")
      ->capture_default_str();
  verify_cmd->add_option("--samples", vopts.sampler_draws, "Sampler draws")
      ->capture_default_str();
  verify_cmd->add_option("--seed", vopts.seed, "Sampler seed")
      ->capture_default_str();
  auto* o_vdb = verify_cmd->add_option("--locations-db", vdb, "Location CSV");
  verify_cmd->add_option("--features", vfeatures, "Feature columns")
      ->delimiter(',');
  auto* o_report =
      verify_cmd->add_option("--report", report, "JSON report path");

  // recognize
  CLI::App* rec_cmd =
      app.add_subcommand("recognize", "Tag dates, ages and phones");
  std::string rec_in, rec_id = "doc", rec_locale = "fr", rec_order = "dmy",
                      rec_ref;
  rec_cmd->add_option("input", rec_in, "Plain-text file")
      ->required()
      ->check(CLI::ExistingFile);
  rec_cmd->add_option("--doc-id", rec_id)->capture_default_str();
  rec_cmd->add_option("--locale", rec_locale)
      ->check(CheckLanguage)
      ->capture_default_str();
  rec_cmd->add_option("--day-month-order", rec_order)
      ->check(CheckOrder)
      ->capture_default_str();
  auto* o_rec_ref =
      rec_cmd->add_option("--reference-date", rec_ref)->check(CheckDate);

  // inspect-db
  CLI::App* db_cmd =
      app.add_subcommand("inspect-db", "Summarize a location database");
  std::string db_path;
  std::vector<std::string> db_features;
  db_cmd->add_option("path", db_path, "Location CSV")->required();
  db_cmd->add_option("--features", db_features, "Feature columns")
      ->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  if (*deid_cmd) {
    PipelineConfig config;
    if (!config_path.empty()) {
      auto loaded = deid::tools::LoadPipelineConfig(config_path);
      if (!loaded.ok()) {
        std::cerr << "config error: " << loaded.status().message() << "\n";
        return deid::tools::kExitConfigError;
      }
      config = *loaded;
    }
    if (*o_eps) config.epsilon = epsilon;
    if (*o_seed) config.seed = seed;
    if (*o_ref) config.reference_date = *deid::ParseIsoDate(reference_date);
    if (*o_loc) config.language = *deid::ParseLanguage(locale);
    if (*o_ord) config.day_month_order = *deid::ParseDayMonthOrder(order);
    if (*o_db) config.locations_db = locations_db;
    if (*o_feat) config.feature_columns = features;
    if (*o_k) config.k = k;
    if (*o_geo) config.geo_threshold_km = geo_km;
    if (*o_rest) config.restore_order = restore_order;
    if (*o_cap) config.age_cap = age_cap;
    if (*o_strict) config.strict = true;
    if (*o_len) config.strict = false;
    if (*o_work) config.workers = workers;
    if (*o_pools) config.pools = pools;
    if (*o_in) config.in = in;
    if (*o_out) config.out = out;
    return deid::tools::RunDeid(config, std::cout, std::cerr);
  }
  if (*verify_cmd) {
    if (*o_vdb) vopts.locations_db = vdb;
    vopts.feature_columns = vfeatures;
    if (*o_report) vopts.report_path = report;
    return deid::tools::RunVerify(vopts, std::cout, std::cerr);
  }
  if (*rec_cmd) {
    deid::LocaleConfig lc;
    lc.language = *deid::ParseLanguage(rec_locale);
    lc.order = *deid::ParseDayMonthOrder(rec_order);
    lc.reference_date =
        *o_rec_ref ? *deid::ParseIsoDate(rec_ref) : deid::Today();
    return deid::tools::RunRecognize(rec_in, rec_id, lc, std::cout, std::cerr);
  }
  return deid::tools::RunInspectDb(db_path, db_features, std::cout, std::cerr);
}
