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

#include <string>
#include <utility>
#include <vector>

#include "deid/annotation.h"
#include "deid/locale.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace deid {
namespace {

using ::std::chrono::year;
using ::testing::HasSubstr;

LocaleConfig Locale(Language language, DayMonthOrder order) {
  LocaleConfig locale;
  locale.language = language;
  locale.order = order;
  locale.reference_date = year{2020} / 12 / 31;
  return locale;
}

const LocaleConfig kEnDmy =
    Locale(Language::kEnglish, DayMonthOrder::kDayFirst);
const LocaleConfig kEnMdy =
    Locale(Language::kEnglish, DayMonthOrder::kMonthFirst);
const LocaleConfig kFrDmy = Locale(Language::kFrench, DayMonthOrder::kDayFirst);

TEST(ParseTemporal, NumericDateDayFirst) {
  auto e = ParseTemporal("12/02/2020", EntityLabel::kDate, kEnDmy);
  ASSERT_TRUE(e.ok()) << e.status();
  EXPECT_EQ(e->kind, TemporalKind::kAbsoluteDate);
  EXPECT_EQ(e->granularity, Granularity::kDay);
  // 2020-02-12 → 2020-12-31: 17 days left in February (leap year) plus
  // March..November (275) plus 31.
  EXPECT_EQ(e->magnitude, 323);
  EXPECT_EQ(e->format.pattern, TemporalPattern::kNumericDate);
}

TEST(ParseTemporal, MonthFirstOrderChangesMeaning) {
  auto e = ParseTemporal("12/02/2020", EntityLabel::kDate, kEnMdy);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(e->magnitude, 29);  // December 2
}

TEST(ParseTemporal, ReferenceDateIsZero) {
  auto e = ParseTemporal("2020-12-31", EntityLabel::kDate, kEnDmy);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(e->magnitude, 0);
}

TEST(ParseTemporal, BareAge) {
  auto e = ParseTemporal("40 years", EntityLabel::kAge, kEnDmy);
  ASSERT_TRUE(e.ok());
  EXPECT_EQ(e->kind, TemporalKind::kRelative);
  EXPECT_EQ(e->magnitude, 40);
  EXPECT_EQ(e->granularity, Granularity::kYear);
  auto fr = ParseTemporal("67 ans", EntityLabel::kAge, kFrDmy);
  ASSERT_TRUE(fr.ok());
  EXPECT_EQ(fr->magnitude, 67);
  EXPECT_EQ(fr->format.language, Language::kFrench);
}

TEST(ParseTemporal, AgoPhrases) {
  auto en = ParseTemporal("10 years ago", EntityLabel::kDate, kEnDmy);
  ASSERT_TRUE(en.ok());
  EXPECT_EQ(en->format.pattern, TemporalPattern::kAgo);
  EXPECT_EQ(en->magnitude, 10);
  auto fr = ParseTemporal("il y a 3 semaines", EntityLabel::kDate, kFrDmy);
  ASSERT_TRUE(fr.ok());
  EXPECT_EQ(fr->granularity, Granularity::kWeek);
  EXPECT_EQ(fr->magnitude, 3);
}

TEST(ParseTemporal, TwoDigitYearPivotsOnReference) {
  auto recent = ParseTemporal("03/07/19", EntityLabel::kDate, kFrDmy);
  ASSERT_TRUE(recent.ok());
  auto full = ParseTemporal("03/07/2019", EntityLabel::kDate, kFrDmy);
  EXPECT_EQ(recent->magnitude, full->magnitude);
  auto old = ParseTemporal("03/07/45", EntityLabel::kDate, kFrDmy);
  auto old_full = ParseTemporal("03/07/1945", EntityLabel::kDate, kFrDmy);
  ASSERT_TRUE(old.ok());
  EXPECT_EQ(old->magnitude, old_full->magnitude);
}

TEST(ParseTemporal, Errors) {
  auto future = ParseTemporal("2021-01-01", EntityLabel::kDate, kEnDmy);
  EXPECT_TRUE(IsFutureDateError(future.status()));
  auto garbage = ParseTemporal("next Tuesday", EntityLabel::kDate, kEnDmy);
  EXPECT_TRUE(absl::IsInvalidArgument(garbage.status()));
  EXPECT_THAT(std::string(garbage.status().message()),
              HasSubstr("nearest supported pattern"));
  EXPECT_FALSE(IsFutureDateError(garbage.status()));
  EXPECT_FALSE(ParseTemporal("31/02/2020", EntityLabel::kDate, kEnDmy).ok());
  EXPECT_FALSE(ParseTemporal("2020-02-12", EntityLabel::kAge, kEnDmy).ok());
  EXPECT_FALSE(ParseTemporal("Dijon", EntityLabel::kLoc, kEnDmy).ok());
  EXPECT_FALSE(ParseTemporal("40 parsecs", EntityLabel::kAge, kEnDmy).ok());
}

TEST(RenderTemporal, LongFormPreservedAfterShift) {
  auto e = ParseTemporal("February 26, 2020", EntityLabel::kDate, kEnDmy);
  ASSERT_TRUE(e.ok());
  TemporalEntity later = *e;
  later.magnitude -= 2;
  auto text = RenderTemporal(later, kEnDmy.reference_date);
  ASSERT_TRUE(text.ok());
  EXPECT_EQ(*text, "February 28, 2020");
}

TEST(RenderTemporal, ZeroIsReferenceDateInOriginalFormat) {
  auto e = ParseTemporal("12/02/2020", EntityLabel::kDate, kEnDmy);
  TemporalEntity zero = *e;
  zero.magnitude = 0;
  EXPECT_EQ(*RenderTemporal(zero, kEnDmy.reference_date), "31/12/2020");
}

TEST(RenderTemporal, AgeFortyTwo) {
  auto e = ParseTemporal("40 years", EntityLabel::kAge, kEnDmy);
  TemporalEntity aged = *e;
  aged.magnitude = 42;
  EXPECT_EQ(*RenderTemporal(aged, kEnDmy.reference_date), "42 years");
  aged.magnitude = 1;
  EXPECT_EQ(*RenderTemporal(aged, kEnDmy.reference_date), "1 year");
}

TEST(RenderTemporal, FrenchOrdinalOnlyOnFirst) {
  auto e = ParseTemporal("1er avril 2020", EntityLabel::kDate, kFrDmy);
  ASSERT_TRUE(e.ok()) << e.status();
  TemporalEntity moved = *e;
  moved.magnitude += 2;
  EXPECT_EQ(*RenderTemporal(moved, kFrDmy.reference_date), "30 mars 2020");
}

TEST(RenderTemporal, BeforeYearOneIsOutOfRange) {
  auto e = ParseTemporal("2020-12-31", EntityLabel::kDate, kEnDmy);
  TemporalEntity ancient = *e;
  ancient.magnitude = 800000;
  EXPECT_TRUE(absl::IsOutOfRange(
      RenderTemporal(ancient, kEnDmy.reference_date).status()));
}

// Surfaces in the supported catalog must survive parse → render unchanged.
class RoundTrip
    : public ::testing::TestWithParam<std::pair<std::string, LocaleConfig>> {};

TEST_P(RoundTrip, ParseThenRenderIsIdentity) {
  const auto& [surface, locale] = GetParam();
  auto e = ParseTemporal(surface, EntityLabel::kDate, locale);
  ASSERT_TRUE(e.ok()) << surface << ": " << e.status();
  auto rendered = RenderTemporal(*e, locale.reference_date);
  ASSERT_TRUE(rendered.ok());
  EXPECT_EQ(*rendered, surface);
}

INSTANTIATE_TEST_SUITE_P(
    Catalog, RoundTrip,
    ::testing::Values(std::pair{std::string("12/02/2020"), kEnDmy},
                      std::pair{std::string("02/12/2020"), kEnMdy},
                      std::pair{std::string("2/3/2020"), kEnMdy},
                      std::pair{std::string("3-7-19"), kFrDmy},
                      std::pair{std::string("12.02.2020"), kFrDmy},
                      std::pair{std::string("05/11/98"), kFrDmy},
                      std::pair{std::string("2020-02-12"), kEnDmy},
                      std::pair{std::string("1999-01-01"), kFrDmy},
                      std::pair{std::string("February 26, 2020"), kEnDmy},
                      std::pair{std::string("February 26 2020"), kEnDmy},
                      std::pair{std::string("Feb 6, 2020"), kEnDmy},
                      std::pair{std::string("26 February 2020"), kEnDmy},
                      std::pair{std::string("FEBRUARY 26, 2020"), kEnDmy},
                      std::pair{std::string("26 février 2020"), kFrDmy},
                      std::pair{std::string("3 mars 2020"), kFrDmy},
                      std::pair{std::string("03 mars 2020"), kFrDmy},
                      std::pair{std::string("1er avril 2020"), kFrDmy},
                      std::pair{std::string("14 Juillet 1989"), kFrDmy},
                      std::pair{std::string("40 years"), kEnDmy},
                      std::pair{std::string("1 year"), kEnDmy},
                      std::pair{std::string("67 ans"), kFrDmy},
                      std::pair{std::string("3 mois"), kFrDmy},
                      std::pair{std::string("10 days"), kEnDmy},
                      std::pair{std::string("10 years ago"), kEnDmy},
                      std::pair{std::string("2 weeks ago"), kEnDmy},
                      std::pair{std::string("il y a 10 ans"), kFrDmy},
                      std::pair{std::string("Il y a 5 jours"), kFrDmy}));

TEST(TemporalDistance, UnitMetric) {
  TemporalEntity a{TemporalKind::kRelative, 40, Granularity::kYear, {}};
  TemporalEntity b{TemporalKind::kRelative, 42, Granularity::kYear, {}};
  EXPECT_EQ(*TemporalDistance(a, b), 2.0);
  EXPECT_EQ(*TemporalDistance(a, a), 0.0);
  TemporalEntity c{TemporalKind::kAbsoluteDate, 323, Granularity::kDay, {}};
  TemporalEntity d{TemporalKind::kAbsoluteDate, 309, Granularity::kDay, {}};
  EXPECT_EQ(*TemporalDistance(c, d), 14.0);
  EXPECT_FALSE(TemporalDistance(a, c).ok());
}

TEST(TemporalDistance, MetricAxiomsOnSamples) {
  std::vector<TemporalEntity> points;
  for (std::int64_t m : {0, 1, 7, 40, 323, 1000}) {
    points.push_back({TemporalKind::kAbsoluteDate, m, Granularity::kDay, {}});
  }
  for (const auto& x : points) {
    for (const auto& y : points) {
      EXPECT_EQ(*TemporalDistance(x, y), *TemporalDistance(y, x));
      EXPECT_EQ(*TemporalDistance(x, y) == 0, x.magnitude == y.magnitude);
      for (const auto& z : points) {
        EXPECT_LE(*TemporalDistance(x, z),
                  *TemporalDistance(x, y) + *TemporalDistance(y, z));
      }
    }
  }
}

TEST(Locale, ParsersAndToday) {
  EXPECT_EQ(*ParseLanguage("en"), Language::kEnglish);
  EXPECT_EQ(*ParseDayMonthOrder("mdy"), DayMonthOrder::kMonthFirst);
  EXPECT_FALSE(ParseLanguage("de").ok());
  EXPECT_FALSE(ParseDayMonthOrder("ymd").ok());
  auto d = ParseIsoDate("2020-02-29");
  ASSERT_TRUE(d.ok());
  EXPECT_EQ(FormatIsoDate(*d), "2020-02-29");
  EXPECT_FALSE(ParseIsoDate("2019-02-29").ok());
  EXPECT_TRUE(Today().ok());
}

}  // namespace
}  // namespace deid
