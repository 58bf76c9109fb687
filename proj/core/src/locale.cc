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

#include "deid/locale.h"

#include "absl/status/status.h"
#include "deid/text_util.h"
#include "fmt/format.h"

namespace deid {

absl::StatusOr<Language> ParseLanguage(std::string_view tag) {
  const std::string lower = AsciiLower(tag);
  if (lower == "fr") return Language::kFrench;
  if (lower == "en") return Language::kEnglish;
  return absl::InvalidArgumentError(
      fmt::format("unsupported locale '{}' (expected fr or en)", tag));
}

std::string_view LanguageTag(Language language) {
  return language == Language::kFrench ? "fr" : "en";
}

absl::StatusOr<DayMonthOrder> ParseDayMonthOrder(std::string_view tag) {
  const std::string lower = AsciiLower(tag);
  if (lower == "dmy") return DayMonthOrder::kDayFirst;
  if (lower == "mdy") return DayMonthOrder::kMonthFirst;
  return absl::InvalidArgumentError(fmt::format(
      "unsupported day_month_order '{}' (expected dmy or mdy)", tag));
}

std::string_view DayMonthOrderTag(DayMonthOrder order) {
  return order == DayMonthOrder::kDayFirst ? "dmy" : "mdy";
}

absl::StatusOr<CivilDate> ParseIsoDate(std::string_view text) {
  int y = 0;
  int m = 0;
  int d = 0;
  if (text.size() != 10 || text[4] != '-' || text[7] != '-' ||
      !ParseInt(text.substr(0, 4), &y) || !ParseInt(text.substr(5, 2), &m) ||
      !ParseInt(text.substr(8, 2), &d)) {
    return absl::InvalidArgumentError(
        fmt::format("expected an ISO date YYYY-MM-DD, got '{}'", text));
  }
  CivilDate date{std::chrono::year{y}, std::chrono::month(m),
                 std::chrono::day(d)};
  if (!date.ok()) {
    return absl::InvalidArgumentError(
        fmt::format("'{}' is not a valid calendar date", text));
  }
  return date;
}

std::string FormatIsoDate(const CivilDate& date) {
  return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(date.year()),
                     static_cast<unsigned>(date.month()),
                     static_cast<unsigned>(date.day()));
}

CivilDate Today() {
  return CivilDate{
      std::chrono::floor<std::chrono::days>(std::chrono::system_clock::now())};
}

}  // namespace deid
