#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "shockcast/errors.hpp"
#include "shockcast/fixture.hpp"
#include "shockcast/series.hpp"

using namespace shockcast;

namespace {

QuarterlySeries make(std::vector<double> v, Quarter start = {2010, 1}) { return {start, std::move(v)}; }

std::vector<double> values_of(const QuarterlySeries& s) { return {s.values().begin(), s.values().end()}; }

}  // namespace

TEST(Quarter, RejectsInvalidQuarterIndex) {
  EXPECT_THROW(Quarter(2020, 0), DomainError);
  EXPECT_THROW(Quarter(2020, 5), DomainError);
}

TEST(Quarter, OrderingFollowsLinearIndex) {
  EXPECT_LT(Quarter(2019, 4), Quarter(2020, 1));
  EXPECT_LT(Quarter(2020, 1), Quarter(2020, 2));
  EXPECT_EQ(Quarter(2019, 4).next(), Quarter(2020, 1));
  EXPECT_EQ(Quarter(2020, 1).prev(), Quarter(2019, 4));
}

TEST(Quarter, FourteenQuartersFromShockOnsetIsWindowEnd) {
  EXPECT_EQ(Quarter(2020, 1) + 13, Quarter(2023, 2));
  EXPECT_EQ(Quarter(2023, 2) - Quarter(2020, 1), 13);
}

TEST(Quarter, ParsesBothLabelForms) {
  EXPECT_EQ(Quarter::parse("2010 Q3"), Quarter(2010, 3));
  EXPECT_EQ(Quarter::parse("2019Q4"), Quarter(2019, 4));
  EXPECT_EQ(Quarter(2020, 2).to_string(), "2020 Q2");
  EXPECT_EQ(Quarter(2020, 2).to_compact_string(), "2020Q2");
  EXPECT_THROW(Quarter::parse("2020 Q5"), DomainError);
  EXPECT_THROW(Quarter::parse("20-Q1"), DomainError);
}

TEST(QuarterlySeries, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(make({}), Error);
  EXPECT_THROW(make({1.0, NAN}), Error);
  EXPECT_THROW(make({INFINITY}), Error);
}

TEST(QuarterlySeries, EndAndSlice) {
  const auto s = make({1, 2, 3, 4, 5}, {2019, 3});
  EXPECT_EQ(s.end(), Quarter(2020, 3));
  const auto sub = s.slice({2019, 4}, {2020, 2});
  EXPECT_EQ(sub.start(), Quarter(2019, 4));
  EXPECT_EQ(values_of(sub), (std::vector<double>{2, 3, 4}));
  EXPECT_THROW(s.slice({2019, 2}, {2020, 1}), WindowError);
  EXPECT_DOUBLE_EQ(s.at({2020, 3}), 5.0);
  EXPECT_THROW(s.at({2021, 1}), DomainError);
}

TEST(LogTransform, UnitLevelsGiveZero) {
  EXPECT_EQ(values_of(log_transform(make({1.0, 1.0}))), (std::vector<double>{0.0, 0.0}));
}

TEST(LogTransform, NaturalLogIdentity) {
  const auto out = log_transform(make({std::exp(1.0), std::exp(2.0)}));
  EXPECT_NEAR(out[0], 1.0, 1e-15);
  EXPECT_NEAR(out[1], 2.0, 1e-15);
}

TEST(LogTransform, NonPositiveValueNamesQuarter) {
  try {
    log_transform(make({1.0, 2.0, 0.0}));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("2010 Q3"), std::string::npos) << e.what();
  }
}

TEST(LogTransform, FarmLevelsRoundTrip) {
  const auto actual = load_fixture().printed_actual_series("FARM");
  std::vector<double> levels;
  for (double v : actual.values()) levels.push_back(std::exp(v));
  const auto back = log_transform(QuarterlySeries(actual.start(), levels));
  for (std::size_t i = 0; i < actual.size(); ++i) EXPECT_NEAR(back[i], actual[i], 1e-9);
}

TEST(Difference, FirstDifferences) {
  const auto out = difference(make({1, 3, 6}), 1);
  EXPECT_EQ(values_of(out), (std::vector<double>{2, 3}));
  EXPECT_EQ(out.start(), Quarter(2010, 2));
}

TEST(Difference, SeasonalLagFour) {
  const auto out = difference(make({1, 2, 3, 4, 5, 6, 7, 8}), 0, 1, 4);
  EXPECT_EQ(values_of(out), (std::vector<double>{4, 4, 4, 4}));
  EXPECT_EQ(out.start(), Quarter(2011, 1));
}

TEST(Difference, SecondDifferences) {
  EXPECT_EQ(values_of(difference(make({1, 2, 4, 7}), 2)), (std::vector<double>{1, 1}));
}

TEST(Difference, ZeroOrderIsIdentity) {
  const auto s = make({0.5, -1.0, 3.25});
  EXPECT_EQ(difference(s, 0, 0), s);
}

TEST(Difference, TooShortIsLengthError) {
  EXPECT_THROW(difference(make({1, 2}), 2), LengthError);
  EXPECT_THROW(difference(make({1, 2, 3, 4}), 0, 1, 4), LengthError);
}

TEST(Difference, LengthPropertyOverRandomOrders) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = static_cast<int>(rng() % 3);
    const int D = static_cast<int>(rng() % 2);
    const int season = 1 + static_cast<int>(rng() % 4);
    const std::size_t n = 12 + rng() % 20;
    std::vector<double> v(n);
    for (auto& x : v) x = normal(rng);
    const auto out = difference(make(v), d, D, season);
    EXPECT_EQ(out.size(), n - static_cast<std::size_t>(d + D * season));
  }
}

TEST(Integrate, InvertsFirstDifference) {
  const auto s = make({1, 3, 6});
  const std::vector<double> init{1};
  EXPECT_EQ(integrate(difference(s, 1), 1, 0, 4, init), s);
}

TEST(Integrate, ZeroIncrementsHoldLevel) {
  const std::vector<double> init{5};
  EXPECT_EQ(values_of(integrate(make({0, 0, 0}, {2010, 2}), 1, 0, 4, init)), (std::vector<double>{5, 5, 5, 5}));
}

TEST(Integrate, WrongInitialCountIsArityError) {
  const std::vector<double> init{1, 2};
  EXPECT_THROW(integrate(make({0, 0}), 1, 0, 4, init), ArityError);
}

TEST(Integrate, FarmRoundTrip) {
  const auto s = load_fixture().printed_actual_series("FARM");
  const std::vector<double> init{s[0]};
  const auto back = integrate(difference(s, 1), 1, 0, 4, init);
  ASSERT_EQ(back.size(), s.size());
  EXPECT_EQ(back.start(), s.start());
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_NEAR(back[i], s[i], 1e-12);
}

TEST(Integrate, RoundTripPropertyOverRandomSeries) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = static_cast<int>(rng() % 3);
    const int D = static_cast<int>(rng() % 2);
    const std::size_t n = 16 + rng() % 24;
    std::vector<double> v(n);
    for (auto& x : v) x = normal(rng);
    const auto s = make(v);
    const std::span<const double> init(v.data(), static_cast<std::size_t>(d + 4 * D));
    if (d == 0 && D == 0) {
      EXPECT_EQ(integrate(difference(s, 0, 0), 0, 0, 4, init), s);
      continue;
    }
    const auto back = integrate(difference(s, d, D, 4), d, D, 4, init);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(back[i], v[i], 1e-12);
  }
}

TEST(Summarize, ConstantSeries) {
  const auto s = summarize(make({2.5, 2.5}));
  EXPECT_EQ(s.min, 2.5);
  EXPECT_EQ(s.mean, 2.5);
  EXPECT_EQ(s.max, 2.5);
}

TEST(Summarize, GovReferenceActuals) {
  const auto s = summarize(load_fixture().printed_actual_series("GOV"));
  EXPECT_DOUBLE_EQ(s.min, 21.45001);
  EXPECT_DOUBLE_EQ(s.max, 21.57223);
  EXPECT_LE(s.min, s.mean);
  EXPECT_LE(s.mean, s.max);
}

TEST(DifferencingPolynomial, MatchesBinomialExpansion) {
  EXPECT_EQ(differencing_polynomial(0, 0, 4), (std::vector<double>{1}));
  EXPECT_EQ(differencing_polynomial(2, 0, 4), (std::vector<double>{1, -2, 1}));
  EXPECT_EQ(differencing_polynomial(1, 1, 4), (std::vector<double>{1, -1, 0, 0, -1, 1}));
}
