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

#include "deid/pattern_recognizer.h"

#include <algorithm>
#include <regex>
#include <string>

#include "deid/temporal.h"
#include "deid/text_util.h"

namespace deid {
namespace {

struct Rule {
  std::regex pattern;
  EntityLabel label;
  int group;  // capture group holding the span (0 = whole match)
};

const std::vector<Rule>& Rules() {
  static const auto* rules = [] {
    const std::string months =
        "january|february|march|april|may|june|july|august|september|"
        "october|november|december|jan|feb|mar|apr|jun|jul|aug|sep|oct|nov|"
        "dec|janvier|février|mars|avril|mai|juin|juillet|août|septembre|"
        "octobre|novembre|décembre";
    const std::string en_units = "years?|months?|weeks?|days?";
    const std::string fr_units = "ans?|mois|semaines?|jours?";
    const auto icase = std::regex::ECMAScript | std::regex::icase;
    auto* r = new std::vector<Rule>();
    r->push_back({std::regex("\\b\\d{1,4} (?:" + en_units + ") ago\\b", icase),
                  EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\bil y a \\d{1,4} (?:" + fr_units + ")(?![\\w])", icase),
         EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\b\\d{4}-\\d{2}-\\d{2}\\b"), EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\b\\d{1,2}([/.\\-])\\d{1,2}\\1(?:\\d{4}|\\d{2})\\b"),
         EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\b(?:" + months + ") \\d{1,2},? \\d{4}\\b", icase),
         EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\b\\d{1,2}(?:er)? (?:" + months + ") \\d{4}\\b", icase),
         EntityLabel::kDate, 0});
    r->push_back(
        {std::regex("\\b(\\d{1,3} (?:" + en_units + "))[ -]old\\b", icase),
         EntityLabel::kAge, 1});
    r->push_back(
        {std::regex("\\b\\d{1,3} ans?(?![\\w])"), EntityLabel::kAge, 0});
    r->push_back({std::regex("\\+\\d{1,3}[ .\\-]?\\d(?:[ .\\-]?\\d{2}){4}\\b"),
                  EntityLabel::kTel, 0});
    r->push_back(
        {std::regex("\\b0\\d(?:[ .\\-]?\\d{2}){4}\\b"), EntityLabel::kTel, 0});
    r->push_back(
        {std::regex(
             "(?:\\(\\d{3}\\) ?|\\b\\d{3}[ .\\-])\\d{3}[ .\\-]\\d{4}\\b"),
         EntityLabel::kTel, 0});
    return r;
  }();
  return *rules;
}

struct Candidate {
  std::size_t begin;
  std::size_t end;
  EntityLabel label;
};

}  // namespace

std::vector<EntitySpan> PatternRecognize(std::string_view text,
                                         const LocaleConfig& locale) {
  absl::StatusOr<std::vector<std::size_t>> offsets = CodepointByteOffsets(text);
  if (!offsets.ok()) return {};

  std::vector<Candidate> candidates;
  for (const Rule& rule : Rules()) {
    using Iterator = std::regex_iterator<std::string_view::const_iterator>;
    for (Iterator it(text.begin(), text.end(), rule.pattern), last; it != last;
         ++it) {
      const auto& m = *it;
      const auto begin = static_cast<std::size_t>(m.position(rule.group));
      const auto end = begin + static_cast<std::size_t>(m.length(rule.group));
      std::string_view surface = text.substr(begin, end - begin);
      if (rule.label == EntityLabel::kDate || rule.label == EntityLabel::kAge) {
        absl::StatusOr<TemporalEntity> parsed =
            ParseTemporal(surface, rule.label, locale);
        if (!parsed.ok() && !IsFutureDateError(parsed.status())) continue;
      }
      candidates.push_back({begin, end, rule.label});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.begin != b.begin) return a.begin < b.begin;
              return a.end > b.end;
            });

  std::vector<EntitySpan> spans;
  std::size_t covered_until = 0;
  for (const Candidate& c : candidates) {
    if (!spans.empty() && c.begin < covered_until) continue;
    auto to_codepoint = [&](std::size_t byte) {
      return static_cast<std::int64_t>(
          std::lower_bound(offsets->begin(), offsets->end(), byte) -
          offsets->begin());
    };
    spans.push_back({to_codepoint(c.begin), to_codepoint(c.end), c.label,
                     std::string(text.substr(c.begin, c.end - c.begin))});
    covered_until = c.end;
  }
  return spans;
}

}  // namespace deid
