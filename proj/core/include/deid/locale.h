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

#ifndef DEID_LOCALE_H_
#define DEID_LOCALE_H_

#include <chrono>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"

namespace deid {

enum class Language { kEnglish, kFrench };
enum class DayMonthOrder { kDayFirst, kMonthFirst };

using CivilDate = std::chrono::year_month_day;

// Locale settings shared by the recognizer and the temporal parser.
// reference_date anchors every absolute date's duration.
struct LocaleConfig {
  Language language = Language::kFrench;
  DayMonthOrder order = DayMonthOrder::kDayFirst;
  CivilDate reference_date{std::chrono::year{2020} / 12 / 31};
};

absl::StatusOr<Language> ParseLanguage(std::string_view tag);  // "fr", "en"
std::string_view LanguageTag(Language language);

absl::StatusOr<DayMonthOrder> ParseDayMonthOrder(
    std::string_view tag);  // dmy|mdy
std::string_view DayMonthOrderTag(DayMonthOrder order);

// Strict ISO-8601 calendar date, YYYY-MM-DD.
absl::StatusOr<CivilDate> ParseIsoDate(std::string_view text);
std::string FormatIsoDate(const CivilDate& date);

// Today's date in UTC.
CivilDate Today();

}  // namespace deid

#endif  // DEID_LOCALE_H_
