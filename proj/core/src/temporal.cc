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

#include "deid/temporal.h"

#include <array>
#include <cstdlib>
#include <optional>
#include <regex>

#include "absl/status/status.h"
#include "deid/text_util.h"
#include "fmt/format.h"

namespace deid {
namespace {

using std::chrono::days;
using std::chrono::sys_days;

constexpr std::string_view kFutureDateTag = "FutureDate: ";

constexpr std::array<std::string_view, 12> kEnglishMonths = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december"};
constexpr std::array<std::string_view, 12> kEnglishMonthAbbrev = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};
constexpr std::array<std::string_view, 12> kFrenchMonths = {
    "janvier", "février", "mars",      "avril",   "mai",      "juin",
    "juillet", "août",    "septembre", "octobre", "novembre", "décembre"};

struct UnitWords {
  Granularity granularity;
  Language language;
  std::string_view singular;
  std::string_view plural;
};

constexpr std::array<UnitWords, 8> kUnitWords = {{
    {Granularity::kYear, Language::kEnglish, "year", "years"},
    {Granularity::kMonth, Language::kEnglish, "month", "months"},
    {Granularity::kWeek, Language::kEnglish, "week", "weeks"},
    {Granularity::kDay, Language::kEnglish, "day", "days"},
    {Granularity::kYear, Language::kFrench, "an", "ans"},
    {Granularity::kMonth, Language::kFrench, "mois", "mois"},
    {Granularity::kWeek, Language::kFrench, "semaine", "semaines"},
    {Granularity::kDay, Language::kFrench, "jour", "jours"},
}};

char32_t UpperCodepoint(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 32;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 32;
  if (cp == 0x153) return 0x152;
  return cp;
}

std::optional<LetterCase> DetectCase(std::string_view word) {
  const std::u32string cps = DecodeUtf8(word);
  if (cps.empty()) return std::nullopt;
  const std::u32string folded = DecodeUtf8(CaseFold(word));
  std::size_t upper_count = 0;
  bool upper_after_first = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] != folded[i]) {
      ++upper_count;
      if (i > 0) upper_after_first = true;
    }
  }
  if (upper_count == 0) return LetterCase::kLower;
  if (upper_count == cps.size()) {
    return cps.size() > 1 ? LetterCase::kUpper : LetterCase::kCapitalized;
  }
  if (!upper_after_first) return LetterCase::kCapitalized;
  return std::nullopt;  // mixed case such as "fEbruary"
}

std::string ApplyCase(std::string_view lower, LetterCase letter_case) {
  std::u32string cps = DecodeUtf8(lower);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (letter_case == LetterCase::kUpper ||
        (letter_case == LetterCase::kCapitalized && i == 0)) {
      cps[i] = UpperCodepoint(cps[i]);
    }
  }
  return EncodeUtf8(cps);
}

struct MonthMatch {
  unsigned month;  // 1..12
  Language language;
  bool abbreviated;
};

std::optional<MonthMatch> LookupMonth(std::string_view word) {
  const std::string folded = CaseFold(word);
  for (unsigned i = 0; i < 12; ++i) {
    if (folded == kEnglishMonths[i])
      return MonthMatch{i + 1, Language::kEnglish, false};
    if (folded == kFrenchMonths[i])
      return MonthMatch{i + 1, Language::kFrench, false};
  }
  for (unsigned i = 0; i < 12; ++i) {
    if (folded == kEnglishMonthAbbrev[i] && folded != kEnglishMonths[i]) {
      return MonthMatch{i + 1, Language::kEnglish, true};
    }
  }
  return std::nullopt;
}

std::string_view MonthWord(unsigned month, Language language,
                           bool abbreviated) {
  if (language == Language::kFrench) return kFrenchMonths[month - 1];
  return abbreviated ? kEnglishMonthAbbrev[month - 1]
                     : kEnglishMonths[month - 1];
}

struct UnitMatch {
  const UnitWords* words;
  bool plural_word;
};

std::optional<UnitMatch> LookupUnit(std::string_view word,
                                    std::optional<Language> language) {
  const std::string folded = CaseFold(word);
  for (const UnitWords& u : kUnitWords) {
    if (language.has_value() && u.language != *language) continue;
    if (folded == u.plural) return UnitMatch{&u, true};
    if (folded == u.singular) return UnitMatch{&u, false};
  }
  return std::nullopt;
}

UnitNumber ClassifyUnitNumber(std::int64_t number, const UnitMatch& unit) {
  if (unit.words->singular == unit.words->plural)
    return UnitNumber::kGrammatical;
  const bool grammatical_plural = number != 1;
  if (unit.plural_word == grammatical_plural) return UnitNumber::kGrammatical;
  return unit.plural_word ? UnitNumber::kAlwaysPlural
                          : UnitNumber::kAlwaysSingular;
}

std::string_view UnitWordFor(std::int64_t number, Granularity granularity,
                             Language language, UnitNumber unit_number) {
  for (const UnitWords& u : kUnitWords) {
    if (u.granularity != granularity || u.language != language) continue;
    switch (unit_number) {
      case UnitNumber::kAlwaysSingular:
        return u.singular;
      case UnitNumber::kAlwaysPlural:
        return u.plural;
      case UnitNumber::kGrammatical:
        return number == 1 ? u.singular : u.plural;
    }
  }
  return "";
}

bool ParseInt(std::string_view digits, std::int64_t* out) {
  return ParseInt64(digits, out);
}

std::string_view NearestPattern(std::string_view surface) {
  int digits = 0;
  int letters = 0;
  int punct = 0;
  for (char c : surface) {
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c == '/' || c == '.' || c == '-') {
      ++punct;
    } else if (static_cast<unsigned char>(c) >= 0x80 ||
               (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      ++letters;
    }
  }
  if (letters == 0 && punct > 0 && surface.size() > 4 && surface[4] == '-') {
    return "iso-date (2020-02-12)";
  }
  if (letters == 0) return "numeric-date (12/02/2020)";
  if (digits >= 5) return "long-date (February 26, 2020 / 26 février 2020)";
  if (surface.find("ago") != std::string_view::npos ||
      surface.find("il y a") != std::string_view::npos) {
    return "ago (10 years ago / il y a 10 ans)";
  }
  return "duration (40 years / 40 ans)";
}

absl::Status Unsupported(std::string_view surface) {
  return absl::InvalidArgumentError(fmt::format(
      "unsupported temporal format '{}'; nearest supported pattern: {}",
      surface, NearestPattern(surface)));
}

absl::StatusOr<TemporalEntity> FromCalendarDate(int year, unsigned month,
                                                unsigned day,
                                                const FormatDescriptor& format,
                                                std::string_view surface,
                                                const LocaleConfig& locale) {
  const CivilDate date{std::chrono::year{year}, std::chrono::month{month},
                       std::chrono::day{day}};
  if (!date.ok()) {
    return absl::InvalidArgumentError(
        fmt::format("'{}' is not a valid calendar date", surface));
  }
  const std::int64_t magnitude =
      (sys_days{locale.reference_date} - sys_days{date}).count();
  if (magnitude < 0) {
    return absl::FailedPreconditionError(
        fmt::format("{}'{}' lies after the reference date {}", kFutureDateTag,
                    surface, FormatIsoDate(locale.reference_date)));
  }
  TemporalEntity entity;
  entity.kind = TemporalKind::kAbsoluteDate;
  entity.magnitude = magnitude;
  entity.granularity = Granularity::kDay;
  entity.format = format;
  return entity;
}

int ExpandTwoDigitYear(int yy, const LocaleConfig& locale) {
  const int reference_year = static_cast<int>(locale.reference_date.year());
  const int century = reference_year - reference_year % 100;
  const int candidate = century + yy;
  return candidate <= reference_year ? candidate : candidate - 100;
}

std::optional<absl::StatusOr<TemporalEntity>> TryIso(
    std::string_view surface, const LocaleConfig& locale) {
  static const std::regex kIso(R"((\d{4})-(\d{2})-(\d{2}))");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(surface.begin(), surface.end(), m, kIso)) {
    return std::nullopt;
  }
  FormatDescriptor format;
  format.pattern = TemporalPattern::kIsoDate;
  format.language = locale.language;
  format.separator = '-';
  return FromCalendarDate(
      std::stoi(m[1].str()), static_cast<unsigned>(std::stoi(m[2].str())),
      static_cast<unsigned>(std::stoi(m[3].str())), format, surface, locale);
}

std::optional<absl::StatusOr<TemporalEntity>> TryNumeric(
    std::string_view surface, const LocaleConfig& locale) {
  static const std::regex kNumeric(
      R"((\d{1,2})([/.\-])(\d{1,2})\2(\d{4}|\d{2}))");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(surface.begin(), surface.end(), m, kNumeric)) {
    return std::nullopt;
  }
  const std::string first = m[1].str();
  const std::string second = m[3].str();
  const std::string year_text = m[4].str();
  const bool day_first = locale.order == DayMonthOrder::kDayFirst;
  const std::string& day_text = day_first ? first : second;
  const std::string& month_text = day_first ? second : first;

  FormatDescriptor format;
  format.pattern = TemporalPattern::kNumericDate;
  format.language = locale.language;
  format.order = locale.order;
  format.separator = m[2].str()[0];
  format.year_digits = static_cast<int>(year_text.size());
  format.pad_day = day_text.size() == 2;
  format.pad_month = month_text.size() == 2;
  int year = std::stoi(year_text);
  if (format.year_digits == 2) year = ExpandTwoDigitYear(year, locale);
  const int day = std::stoi(day_text);
  const int month = std::stoi(month_text);
  return FromCalendarDate(year, static_cast<unsigned>(month),
                          static_cast<unsigned>(day), format, surface, locale);
}

std::optional<absl::StatusOr<TemporalEntity>> TryLong(
    std::string_view surface, const LocaleConfig& locale) {
  static const std::regex kMonthFirst(R"(([^\d\s,.]+) (\d{1,2})(,?) (\d{4}))");
  static const std::regex kDayFirst(R"((\d{1,2})(er)? ([^\d\s,.]+) (\d{4}))");
  std::match_results<std::string_view::const_iterator> m;
  FormatDescriptor format;
  format.pattern = TemporalPattern::kLongDate;
  std::string month_word;
  std::string day_text;
  std::string year_text;
  if (std::regex_match(surface.begin(), surface.end(), m, kMonthFirst)) {
    format.order = DayMonthOrder::kMonthFirst;
    month_word = m[1].str();
    day_text = m[2].str();
    format.comma = m[3].length() > 0;
    year_text = m[4].str();
  } else if (std::regex_match(surface.begin(), surface.end(), m, kDayFirst)) {
    format.order = DayMonthOrder::kDayFirst;
    day_text = m[1].str();
    format.ordinal_first = m[2].length() > 0;
    month_word = m[3].str();
    year_text = m[4].str();
    format.comma = false;
  } else {
    return std::nullopt;
  }
  const std::optional<MonthMatch> month = LookupMonth(month_word);
  const std::optional<LetterCase> letter_case = DetectCase(month_word);
  if (!month.has_value() || !letter_case.has_value()) return std::nullopt;
  const int day = std::stoi(day_text);
  if (format.ordinal_first &&
      (day != 1 || month->language != Language::kFrench)) {
    return std::nullopt;
  }
  format.language = month->language;
  format.abbreviated_month = month->abbreviated;
  format.letter_case = *letter_case;
  format.pad_day = day_text.size() == 2 && day_text[0] == '0';
  return FromCalendarDate(std::stoi(year_text), month->month,
                          static_cast<unsigned>(day), format, surface, locale);
}

std::optional<TemporalEntity> TryDurationOrAgo(std::string_view surface) {
  static const std::regex kDuration(R"((\d{1,4}) ([^\d\s]+))");
  static const std::regex kAgoEnglish(R"((\d{1,4}) ([^\d\s]+) ([Aa][Gg][Oo]))");
  static const std::regex kAgoFrench(
      R"(([Ii][Ll] [Yy] [Aa]) (\d{1,4}) ([^\d\s]+))");
  std::match_results<std::string_view::const_iterator> m;
  FormatDescriptor format;
  std::string number_text;
  std::string unit_text;
  std::string case_text;  // the words whose letter case must be reproduced
  std::optional<Language> language;
  if (std::regex_match(surface.begin(), surface.end(), m, kAgoEnglish)) {
    format.pattern = TemporalPattern::kAgo;
    number_text = m[1].str();
    unit_text = m[2].str();
    case_text = m[3].str();
    language = Language::kEnglish;
  } else if (std::regex_match(surface.begin(), surface.end(), m, kAgoFrench)) {
    format.pattern = TemporalPattern::kAgo;
    case_text = m[1].str();
    number_text = m[2].str();
    unit_text = m[3].str();
    language = Language::kFrench;
  } else if (std::regex_match(surface.begin(), surface.end(), m, kDuration)) {
    format.pattern = TemporalPattern::kDuration;
    number_text = m[1].str();
    unit_text = m[2].str();
  } else {
    return std::nullopt;
  }
  const std::optional<UnitMatch> unit = LookupUnit(unit_text, language);
  if (!unit.has_value()) return std::nullopt;
  if (number_text.size() > 1 && number_text[0] == '0') return std::nullopt;

  std::optional<LetterCase> letter_case = DetectCase(unit_text);
  if (!letter_case.has_value()) return std::nullopt;
  if (format.pattern == TemporalPattern::kAgo) {
    std::optional<LetterCase> phrase_case;
    if (*language == Language::kEnglish) {
      phrase_case = DetectCase(case_text);
      if (phrase_case == LetterCase::kCapitalized) return std::nullopt;
    } else if (case_text == "il y a") {
      phrase_case = LetterCase::kLower;
    } else if (case_text == "Il y a") {
      phrase_case = LetterCase::kCapitalized;
    } else if (case_text == "IL Y A") {
      phrase_case = LetterCase::kUpper;
    }
    if (!phrase_case.has_value()) return std::nullopt;
    // The unit word is uppercase only inside an all-caps phrase.
    const LetterCase expected_unit = *phrase_case == LetterCase::kUpper
                                         ? LetterCase::kUpper
                                         : LetterCase::kLower;
    if (*letter_case != expected_unit) return std::nullopt;
    letter_case = phrase_case;
  }

  std::int64_t number = 0;
  if (!ParseInt(number_text, &number)) return std::nullopt;
  format.language = unit->words->language;
  format.letter_case = *letter_case;
  format.unit_number = ClassifyUnitNumber(number, *unit);

  TemporalEntity entity;
  entity.kind = TemporalKind::kRelative;
  entity.magnitude = number;
  entity.granularity = unit->words->granularity;
  entity.format = format;
  return entity;
}

std::string PadNumber(unsigned value, bool pad) {
  return pad ? fmt::format("{:02d}", value) : fmt::format("{}", value);
}

}  // namespace

std::string_view GranularityName(Granularity granularity) {
  switch (granularity) {
    case Granularity::kDay:
      return "DAY";
    case Granularity::kWeek:
      return "WEEK";
    case Granularity::kMonth:
      return "MONTH";
    case Granularity::kYear:
      return "YEAR";
  }
  return "?";
}

std::string_view PatternName(TemporalPattern pattern) {
  switch (pattern) {
    case TemporalPattern::kNumericDate:
      return "numeric-date";
    case TemporalPattern::kIsoDate:
      return "iso-date";
    case TemporalPattern::kLongDate:
      return "long-date";
    case TemporalPattern::kDuration:
      return "duration";
    case TemporalPattern::kAgo:
      return "ago";
  }
  return "?";
}

absl::StatusOr<TemporalEntity> ParseTemporal(std::string_view surface,
                                             EntityLabel label,
                                             const LocaleConfig& locale) {
  if (label != EntityLabel::kDate && label != EntityLabel::kAge) {
    return absl::InvalidArgumentError(
        fmt::format("temporal parsing needs a DATE or AGE label, got {}",
                    LabelName(label)));
  }
  if (!locale.reference_date.ok()) {
    return absl::InvalidArgumentError("reference date is not a valid date");
  }
  for (auto attempt : {TryIso, TryNumeric, TryLong}) {
    std::optional<absl::StatusOr<TemporalEntity>> result =
        attempt(surface, locale);
    if (!result.has_value()) continue;
    if (result->ok() && label == EntityLabel::kAge) {
      return absl::InvalidArgumentError(
          fmt::format("AGE surface '{}' is a calendar date; expected a "
                      "duration such as '40 years'",
                      surface));
    }
    return *std::move(result);
  }
  if (std::optional<TemporalEntity> relative = TryDurationOrAgo(surface)) {
    return *relative;
  }
  return Unsupported(surface);
}

bool IsFutureDateError(const absl::Status& status) {
  return absl::IsFailedPrecondition(status) &&
         std::string_view(status.message().data(), status.message().size())
             .starts_with(kFutureDateTag);
}

absl::StatusOr<std::string> RenderTemporal(const TemporalEntity& entity,
                                           const CivilDate& reference_date) {
  if (entity.magnitude < 0) {
    return absl::InvalidArgumentError("temporal magnitude must be >= 0");
  }
  const FormatDescriptor& f = entity.format;
  if (entity.kind == TemporalKind::kRelative) {
    const std::string unit =
        ApplyCase(UnitWordFor(entity.magnitude, entity.granularity, f.language,
                              f.unit_number),
                  f.letter_case == LetterCase::kUpper ? LetterCase::kUpper
                                                      : LetterCase::kLower);
    if (f.pattern == TemporalPattern::kDuration) {
      return fmt::format("{} {}", entity.magnitude,
                         ApplyCase(unit, f.letter_case));
    }
    if (f.language == Language::kEnglish) {
      return fmt::format("{} {} {}", entity.magnitude, unit,
                         ApplyCase("ago", f.letter_case));
    }
    return fmt::format("{} {} {}", ApplyCase("il y a", f.letter_case),
                       entity.magnitude, unit);
  }

  if (entity.granularity != Granularity::kDay) {
    return absl::InvalidArgumentError(
        "absolute dates must have DAY granularity");
  }
  const CivilDate date{sys_days{reference_date} - days{entity.magnitude}};
  const int year = static_cast<int>(date.year());
  if (year < 1) {
    return absl::OutOfRangeError(fmt::format(
        "magnitude {} days places the date before year 1", entity.magnitude));
  }
  const unsigned month = static_cast<unsigned>(date.month());
  const unsigned day = static_cast<unsigned>(date.day());
  switch (f.pattern) {
    case TemporalPattern::kIsoDate:
      return FormatIsoDate(date);
    case TemporalPattern::kNumericDate: {
      const std::string year_text = f.year_digits == 2
                                        ? fmt::format("{:02d}", year % 100)
                                        : fmt::format("{:04d}", year);
      const std::string day_text = PadNumber(day, f.pad_day);
      const std::string month_text = PadNumber(month, f.pad_month);
      const std::string sep(1, f.separator);
      return f.order == DayMonthOrder::kDayFirst
                 ? fmt::format("{}{}{}{}{}", day_text, sep, month_text, sep,
                               year_text)
                 : fmt::format("{}{}{}{}{}", month_text, sep, day_text, sep,
                               year_text);
    }
    case TemporalPattern::kLongDate: {
      const std::string month_word = ApplyCase(
          MonthWord(month, f.language, f.abbreviated_month), f.letter_case);
      const std::string day_text =
          (f.ordinal_first && day == 1) ? "1er" : PadNumber(day, f.pad_day);
      if (f.order == DayMonthOrder::kMonthFirst) {
        return fmt::format("{} {}{} {}", month_word, day_text,
                           f.comma ? "," : "", year);
      }
      return fmt::format("{} {} {}", day_text, month_word, year);
    }
    default:
      return absl::InvalidArgumentError(
          "absolute date with a relative pattern");
  }
}

absl::StatusOr<double> TemporalDistance(const TemporalEntity& a,
                                        const TemporalEntity& b) {
  if (a.granularity != b.granularity) {
    return absl::InvalidArgumentError(fmt::format(
        "temporal distance between {} and {} entities is undefined",
        GranularityName(a.granularity), GranularityName(b.granularity)));
  }
  return static_cast<double>(std::llabs(a.magnitude - b.magnitude));
}

}  // namespace deid
