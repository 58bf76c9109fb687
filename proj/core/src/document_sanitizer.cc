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

#include "deid/document_sanitizer.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "absl/status/status.h"
#include "deid/budget.h"
#include "deid/memo.h"
#include "deid/temporal.h"
#include "deid/temporal_mechanism.h"
#include "deid/text_util.h"
#include "fmt/format.h"

namespace deid {
namespace {

enum class SpanAction {
  kTemporal,
  kTemporalPlaceholder,
  kLocation,
  kLocationFallback,
  kPool,
  kLayout,
};

// What to do with one span, decided before any randomness is drawn.
struct SpanPlan {
  SpanAction action = SpanAction::kPool;
  MemoKey key;
  TemporalEntity temporal;         // kTemporal
  std::size_t location_index = 0;  // kLocation
};

struct SurrogateValue {
  std::int64_t magnitude = 0;
  std::size_t location = 0;
  std::string text;
};

std::string SpanRef(const AnnotatedDocument& doc, const EntitySpan& span) {
  return fmt::format("document '{}': {} span [{},{})", doc.doc_id(),
                     LabelName(span.label), span.start, span.end);
}

absl::StatusOr<SpanPlan> PlanSpan(const AnnotatedDocument& doc,
                                  const EntitySpan& span, const LocationDb* db,
                                  const SanitizerConfig& config) {
  SpanPlan plan;
  switch (span.label) {
    case EntityLabel::kDate:
    case EntityLabel::kAge: {
      absl::StatusOr<TemporalEntity> entity =
          ParseTemporal(span.surface, span.label, config.locale);
      if (entity.ok()) {
        plan.action = SpanAction::kTemporal;
        plan.temporal = *entity;
        plan.key = TemporalMemoKey(span.label, *entity);
        return plan;
      }
      if (config.unparseable_temporal == UnparseableTemporalPolicy::kFail) {
        const char* reason = IsFutureDateError(entity.status())
                                 ? "lies after the reference date"
                                 : "has an unsupported format";
        return absl::InvalidArgumentError(
            fmt::format("{} {}", SpanRef(doc, span), reason));
      }
      plan.action = SpanAction::kTemporalPlaceholder;
      plan.key = MemoKey{span.label,
                         CanonicalKey(fmt::format("raw:{}", span.surface))};
      return plan;
    }
    case EntityLabel::kLoc: {
      plan.key = MemoKey{span.label, CanonicalKey(span.surface)};
      if (db == nullptr) {
        return absl::FailedPreconditionError(
            fmt::format("{} needs a location database", SpanRef(doc, span)));
      }
      if (std::optional<std::size_t> index = db->FindByName(span.surface)) {
        plan.action = SpanAction::kLocation;
        plan.location_index = *index;
        return plan;
      }
      if (config.unknown_location == UnknownLocationPolicy::kFail) {
        return absl::NotFoundError(fmt::format(
            "{} is not in the location database", SpanRef(doc, span)));
      }
      plan.action = SpanAction::kLocationFallback;
      return plan;
    }
    case EntityLabel::kPer:
    case EntityLabel::kOrg:
      plan.action = SpanAction::kPool;
      plan.key = MemoKey{span.label, CanonicalKey(span.surface)};
      return plan;
    case EntityLabel::kTel:
    case EntityLabel::kRef:
    case EntityLabel::kQid:
      plan.action = SpanAction::kLayout;
      plan.key = MemoKey{span.label, CanonicalKey(span.surface)};
      return plan;
  }
  return absl::InternalError("unhandled label");
}

// Case-folded words of at least three characters; shorter ones ("de",
// "St") are too common to identify anyone.
std::vector<std::string> Words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream stream(CanonicalKey(text));
  std::string word;
  while (stream >> word) {
    if (CodepointLength(word) >= 3) words.push_back(word);
  }
  return words;
}

// True if a pool entry would repeat any word of an original name.
bool SharesWord(std::string_view candidate,
                const std::set<std::string>& original_words) {
  for (const std::string& w : Words(candidate)) {
    if (original_words.contains(w)) return true;
  }
  return false;
}

// Largest day count that still renders on or after 0001-01-01.
std::int64_t MaxRenderableDays(const CivilDate& reference) {
  using std::chrono::sys_days;
  const CivilDate first{std::chrono::year{1}, std::chrono::January,
                        std::chrono::day{1}};
  return (sys_days{reference} - sys_days{first}).count();
}

}  // namespace

absl::StatusOr<SanitizedDocument> SanitizeDocument(
    const AnnotatedDocument& doc, const LocationDb* db,
    const SurrogatePool& pools, const SanitizerConfig& config,
    RandomSource& rng) {
  const std::vector<EntitySpan>& spans = doc.spans();
  std::vector<SpanPlan> plans;
  plans.reserve(spans.size());
  std::vector<MemoKey> dp_keys;
  std::set<std::string> original_surfaces;
  std::set<std::string> original_words;  // from PER surfaces
  for (const EntitySpan& span : spans) {
    absl::StatusOr<SpanPlan> plan = PlanSpan(doc, span, db, config);
    if (!plan.ok()) return plan.status();
    if (plan->action != SpanAction::kTemporalPlaceholder &&
        IsDpLabel(span.label)) {
      dp_keys.push_back(plan->key);
    }
    original_surfaces.insert(CanonicalKey(span.surface));
    if (span.label == EntityLabel::kPer) {
      for (std::string& w : Words(span.surface)) original_words.insert(w);
    }
    plans.push_back(*std::move(plan));
  }

  BudgetLedger ledger = AllocateBudget(dp_keys, config.epsilon);
  SanitizedDocument out;
  out.doc_id = doc.doc_id();
  std::set<std::string> warnings;

  MemoTable<SurrogateValue> memo;
  std::map<EntityLabel, std::set<std::size_t>> used_pool_entries;
  std::set<std::string> used_surrogates;

  for (std::size_t s = 0; s < spans.size(); ++s) {
    const EntitySpan& span = spans[s];
    const SpanPlan& plan = plans[s];
    auto produce = [&]() -> absl::StatusOr<SurrogateValue> {
      SurrogateValue value;
      switch (plan.action) {
        case SpanAction::kTemporal: {
          const Epsilon share = *ledger.ShareFor(plan.key);
          value.magnitude =
              SanitizeTemporal(plan.temporal, share, rng).magnitude;
          ledger.MarkConsumed(plan.key);
          break;
        }
        case SpanAction::kTemporalPlaceholder:
          value.text = fmt::format("[{}]", LabelName(span.label));
          warnings.insert(
              fmt::format("unparseable {} replaced by a placeholder",
                          LabelName(span.label)));
          break;
        case SpanAction::kLocation: {
          const Epsilon share = *ledger.ShareFor(plan.key);
          absl::StatusOr<CandidateSet> candidates = BuildCandidateSet(
              *db, plan.location_index, config.k, config.geo_threshold_km);
          if (!candidates.ok()) return candidates.status();
          if (candidates->truncated()) {
            warnings.insert(fmt::format(
                "LOC candidate set truncated to {} of k={} within {:g} km",
                candidates->entries.size(), config.k, config.geo_threshold_km));
          }
          const CandidateDistribution dist =
              LocationDistribution(*candidates, share);
          const std::size_t pick =
              InvertCumulative(dist.probabilities, rng.NextOpenUniform());
          value.location = dist.candidates.entries[pick].index;
          ledger.MarkConsumed(plan.key);
          break;
        }
        case SpanAction::kLocationFallback:
          value.location = rng.NextIndex(db->size());
          ledger.MarkConsumed(plan.key);
          warnings.insert(
              "LOC not in the location database; uniform fallback used");
          break;
        case SpanAction::kPool: {
          const std::vector<std::string>& names = pools.Names(span.label);
          std::vector<std::size_t> available;
          for (std::size_t i = 0; i < names.size(); ++i) {
            if (used_pool_entries[span.label].contains(i)) continue;
            if (original_surfaces.contains(CanonicalKey(names[i]))) continue;
            if (span.label == EntityLabel::kPer &&
                SharesWord(names[i], original_words)) {
              continue;
            }
            available.push_back(i);
          }
          if (available.empty()) {
            return absl::ResourceExhaustedError(fmt::format(
                "{}: surrogate pool exhausted", SpanRef(doc, span)));
          }
          const std::size_t pick = available[rng.NextIndex(available.size())];
          used_pool_entries[span.label].insert(pick);
          value.text = names[pick];
          break;
        }
        case SpanAction::kLayout: {
          // Regenerate on collision with any original surface or with a
          // surrogate already issued for a different key.
          constexpr int kMaxAttempts = 64;
          for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
            value.text = GenerateLayoutPreserving(span.surface, rng);
            const std::string canonical = CanonicalKey(value.text);
            if (!original_surfaces.contains(canonical) &&
                !used_surrogates.contains(canonical)) {
              break;
            }
          }
          used_surrogates.insert(CanonicalKey(value.text));
          break;
        }
      }
      return value;
    };
    absl::StatusOr<SurrogateValue> bound =
        memo.GetOrInsert(plan.key.label, plan.key.key, produce);
    if (!bound.ok()) return bound.status();
  }

  if (config.restore_order) {
    std::vector<std::int64_t> originals;
    std::vector<std::int64_t> sanitized;
    std::vector<const MemoKey*> keys;
    std::set<MemoKey> seen;
    for (const SpanPlan& plan : plans) {
      if (plan.action != SpanAction::kTemporal ||
          plan.key.label != EntityLabel::kDate ||
          plan.temporal.kind != TemporalKind::kAbsoluteDate ||
          !seen.insert(plan.key).second) {
        continue;
      }
      originals.push_back(plan.temporal.magnitude);
      sanitized.push_back(memo.Find(plan.key.label, plan.key.key)->magnitude);
      keys.push_back(&plan.key);
    }
    RestoreOrder(originals, sanitized);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      memo.FindMutable(keys[i]->label, keys[i]->key)->magnitude = sanitized[i];
    }
  }

  // Render surrogate surfaces.
  const std::int64_t max_days = MaxRenderableDays(config.locale.reference_date);
  std::vector<std::string> surfaces;
  surfaces.reserve(spans.size());
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const EntitySpan& span = spans[s];
    const SpanPlan& plan = plans[s];
    const SurrogateValue& value = *memo.Find(plan.key.label, plan.key.key);
    ++out.label_counts[span.label];
    switch (plan.action) {
      case SpanAction::kTemporal: {
        TemporalEntity entity = plan.temporal;
        entity.magnitude = value.magnitude;
        if (config.age_cap.has_value() && span.label == EntityLabel::kAge &&
            entity.granularity == Granularity::kYear) {
          entity.magnitude = std::min(entity.magnitude, *config.age_cap);
        }
        if (entity.kind == TemporalKind::kAbsoluteDate &&
            entity.magnitude > max_days) {
          entity.magnitude = max_days;
          warnings.insert("DATE surrogate clamped to 0001-01-01");
        }
        absl::StatusOr<std::string> rendered =
            RenderTemporal(entity, config.locale.reference_date);
        if (!rendered.ok()) {
          return absl::InternalError(
              fmt::format("{}: {}", SpanRef(doc, span),
                          std::string(rendered.status().message())));
        }
        surfaces.push_back(*std::move(rendered));
        break;
      }
      case SpanAction::kLocation:
      case SpanAction::kLocationFallback:
        surfaces.push_back(db->record(value.location).name);
        break;
      default:
        surfaces.push_back(value.text);
        break;
    }
  }

  // New offsets, left to right in code points.
  std::int64_t shift = 0;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const EntitySpan& span = spans[s];
    const auto length = static_cast<std::int64_t>(CodepointLength(surfaces[s]));
    Replacement r;
    r.original_start = span.start;
    r.original_end = span.end;
    r.label = span.label;
    r.surrogate = surfaces[s];
    r.new_start = span.start + shift;
    r.new_end = r.new_start + length;
    shift += length - (span.end - span.start);
    out.replacements.push_back(std::move(r));
  }

  // Splice right to left so earlier byte offsets stay valid.
  std::string text = doc.text();
  const std::vector<std::size_t>& bytes = doc.byte_offsets();
  for (std::size_t s = spans.size(); s-- > 0;) {
    const std::size_t begin = bytes[spans[s].start];
    const std::size_t end = bytes[spans[s].end];
    text.replace(begin, end - begin, surfaces[s]);
  }
  out.text = std::move(text);

  out.budget.total = ledger.total().value();
  out.budget.consumed = ledger.ConsumedTotal();
  std::set<MemoKey> reported;
  for (const SpanPlan& plan : plans) {
    std::optional<Epsilon> share = ledger.ShareFor(plan.key);
    if (share.has_value() && reported.insert(plan.key).second) {
      out.budget.shares.push_back({plan.key.label, share->value()});
    }
  }
  out.warnings.assign(warnings.begin(), warnings.end());
  return out;
}

}  // namespace deid
