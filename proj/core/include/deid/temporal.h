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

#ifndef DEID_TEMPORAL_H_
#define DEID_TEMPORAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "deid/annotation.h"
#include "deid/locale.h"

namespace deid {

// Unit of the temporal metric. Distances are only defined between entities
// sharing a granularity.
enum class Granularity { kDay, kWeek, kMonth, kYear };

enum class TemporalKind {
  kAbsoluteDate,  // a calendar date, stored as days before the reference date
  kRelative,      // an age or an "N units ago" phrase
};

// Surface pattern families. Each has a parser and a renderer that are mutual
// inverses on valid input.
enum class TemporalPattern {
  kNumericDate,  // 12/02/2020, 3-7-19, 12.02.2020
  kIsoDate,      // 2020-02-12
  kLongDate,     // February 26, 2020 / 26 février 2020 / 1er mars 2020
  kDuration,     // 40 years / 40 ans
  kAgo,          // 10 years ago / il y a 10 ans
};

enum class LetterCase { kLower, kCapitalized, kUpper };

// How the singular/plural unit word relates to the number.
enum class UnitNumber { kGrammatical, kAlwaysSingular, kAlwaysPlural };

// Everything needed to re-render a value in its original surface shape.
struct FormatDescriptor {
  TemporalPattern pattern = TemporalPattern::kNumericDate;
  Language language = Language::kFrench;
  // Numeric dates: field order. Long dates: kMonthFirst for
  // "February 26, 2020", kDayFirst for "26 February 2020".
  DayMonthOrder order = DayMonthOrder::kDayFirst;
  char separator = '/';
  int year_digits = 4;
  bool pad_day = true;
  bool pad_month = true;
  bool comma = true;               // "February 26, 2020"
  bool abbreviated_month = false;  // "Feb 26, 2020"
  bool ordinal_first = false;      // "1er mars 2020"
  LetterCase letter_case = LetterCase::kLower;
  UnitNumber unit_number = UnitNumber::kGrammatical;

  friend bool operator==(const FormatDescriptor&,
                         const FormatDescriptor&) = default;
};

struct TemporalEntity {
  TemporalKind kind = TemporalKind::kRelative;
  std::int64_t magnitude = 0;  // in granularity units, >= 0
  Granularity granularity = Granularity::kDay;
  FormatDescriptor format;

  friend bool operator==(const TemporalEntity&,
                         const TemporalEntity&) = default;
};

std::string_view GranularityName(Granularity granularity);  // "DAY", ...
std::string_view PatternName(TemporalPattern pattern);

// Parses a DATE or AGE surface. Absolute dates become a day count before
// locale.reference_date. Ambiguous numeric dates follow locale.order.
//
// Errors: InvalidArgument for unsupported surfaces (the message names the
// closest supported pattern) or for labels other than DATE/AGE;
// FailedPrecondition (see IsFutureDateError) when the date lies after the
// reference date.
absl::StatusOr<TemporalEntity> ParseTemporal(std::string_view surface,
                                             EntityLabel label,
                                             const LocaleConfig& locale);

bool IsFutureDateError(const absl::Status& status);

// Renders entity with its stored format. Absolute dates are placed
// magnitude days before reference_date; OutOfRange if that precedes year 1.
absl::StatusOr<std::string> RenderTemporal(const TemporalEntity& entity,
                                           const CivilDate& reference_date);

// |a.magnitude - b.magnitude| in the shared unit; InvalidArgument when the
// granularities differ.
absl::StatusOr<double> TemporalDistance(const TemporalEntity& a,
                                        const TemporalEntity& b);

}  // namespace deid

#endif  // DEID_TEMPORAL_H_
