#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "shockcast/csv.hpp"
#include "shockcast/errors.hpp"
#include "shockcast/fixture.hpp"

using namespace shockcast;

namespace {

PanelDataset parse(const std::string& text, CsvOptions opts = {}) {
  std::istringstream in(text);
  return read_csv(in, opts, "test.csv");
}

}  // namespace

TEST(Fixture, FarmFirstRecord) {
  const auto& r = load_fixture().sector("FARM").rows.front();
  EXPECT_EQ(r.forecast, 18.16851);
  EXPECT_EQ(r.actual, 18.07062);
  EXPECT_EQ(r.impact, -0.09789289);
}

TEST(Fixture, GovLastRecord) {
  const auto& r = load_fixture().sector("GOV").rows.back();
  EXPECT_EQ(r.forecast, 21.58716);
  EXPECT_EQ(r.actual, 21.57223);
  EXPECT_EQ(r.impact, -0.014925834);
}

TEST(Fixture, PublishedAggregateEntry) {
  const auto& agg = load_fixture().aggregate;
  ASSERT_EQ(agg.size(), 14u);
  EXPECT_EQ(agg[3].quarter, Quarter(2020, 4));
  EXPECT_EQ(agg[3].impact, 0.23587149);
}

TEST(Fixture, ShapeAndSectorOrder) {
  const auto& fx = load_fixture();
  ASSERT_EQ(fx.sectors.size(), 13u);
  for (std::size_t i = 0; i < 13; ++i) {
    EXPECT_EQ(fx.sectors[i].code, kDefaultSectors[i]);
    EXPECT_EQ(fx.sectors[i].rows.size(), 14u);
  }
  EXPECT_EQ(fx.turning_points.size(), 13u);
  EXPECT_EQ(fx.variance.size(), 13u);
  EXPECT_THROW(fx.sector("MINING"), DomainError);
}

TEST(Fixture, PrintedColumnsAgreeWithinRounding) {
  // Forecast and actual are printed to 5 decimals, so their difference can be
  // off the printed impact by up to one unit in the 5th place.
  double worst = 0.0;
  for (const auto& s : load_fixture().sectors) {
    for (const auto& r : s.rows) worst = std::max(worst, std::abs((r.actual - r.forecast) - r.impact));
  }
  EXPECT_LE(worst, 1e-5);
}

TEST(Fixture, ReconstructedActualsCarryImpactPrecision) {
  const auto& fx = load_fixture();
  for (const auto& s : fx.sectors) {
    const auto f = fx.forecast_series(s.code);
    const auto a = fx.actual_series(s.code);
    const auto printed = fx.printed_actual_series(s.code);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(a[i] - f[i], s.rows[i].impact, 1e-12);
      EXPECT_NEAR(a[i], printed[i], 1e-5 + 1e-12);
    }
  }
}

TEST(Fixture, QuarterSumsMatchPublishedAggregate) {
  const auto& fx = load_fixture();
  for (std::size_t i = 0; i < 14; ++i) {
    double sum = 0.0;
    for (const auto& s : fx.sectors) sum += s.rows[i].impact;
    EXPECT_NEAR(sum, fx.aggregate[i].impact, 1e-6);
  }
}

TEST(Fixture, ActualPanelIsLogScaleFixture) {
  const auto panel = load_fixture().actual_panel();
  EXPECT_EQ(panel.provenance(), Provenance::Fixture);
  EXPECT_EQ(panel.start(), Quarter(2020, 1));
  EXPECT_EQ(panel.end(), Quarter(2023, 2));
  EXPECT_EQ(panel.sectors().size(), 13u);
}

TEST(Fixture, JsonRoundTrip) {
  const auto& fx = load_fixture();
  const auto back = fixture_from_json(fixture_to_json(fx));
  ASSERT_EQ(back.sectors.size(), fx.sectors.size());
  for (std::size_t i = 0; i < fx.sectors.size(); ++i) {
    EXPECT_EQ(back.sectors[i].code, fx.sectors[i].code);
    EXPECT_EQ(back.sectors[i].reported_model, fx.sectors[i].reported_model);
    for (std::size_t j = 0; j < 14; ++j) {
      EXPECT_EQ(back.sectors[i].rows[j].forecast, fx.sectors[i].rows[j].forecast);
      EXPECT_EQ(back.sectors[i].rows[j].actual, fx.sectors[i].rows[j].actual);
      EXPECT_EQ(back.sectors[i].rows[j].impact, fx.sectors[i].rows[j].impact);
    }
  }
  EXPECT_EQ(back.turning_points[3].quarter, fx.turning_points[3].quarter);
  EXPECT_EQ(back.variance[0].contribution, fx.variance[0].contribution);
  EXPECT_THROW(fixture_from_json("{\"sectors\": 3}"), SchemaError);
  EXPECT_THROW(fixture_from_json("not json"), SchemaError);
}

TEST(Csv, HappyPath) {
  const auto panel = parse("quarter,FARM,UTL\n2010 Q1,1.0,2.0\n2010 Q2,1.1,2.1\n2010 Q3,1.2,2.2\n");
  ASSERT_EQ(panel.sectors().size(), 2u);
  EXPECT_EQ(panel.series("FARM").size(), 3u);
  EXPECT_EQ(panel.series("UTL")[2], 2.2);
  EXPECT_EQ(panel.start(), Quarter(2010, 1));
  EXPECT_EQ(panel.provenance(), Provenance::CsvFile);
}

TEST(Csv, AcceptsCompactLabelsAndBom) {
  const auto panel = parse("\xEF\xBB\xBFquarter,A\r\n2010Q4,1\r\n2011Q1,2\r\n");
  EXPECT_EQ(panel.start(), Quarter(2010, 4));
  EXPECT_EQ(panel.series("A")[1], 2.0);
}

TEST(Csv, GapNamesMissingQuarter) {
  try {
    parse("quarter,A\n2010 Q1,1\n2010 Q2,2\n2010 Q4,3\n");
    FAIL() << "expected GapError";
  } catch (const GapError& e) {
    EXPECT_EQ(e.missing(), Quarter(2010, 3));
    EXPECT_NE(std::string(e.what()).find("2010 Q3"), std::string::npos);
  }
}

TEST(Csv, NonNumericCellReportsRowAndColumn) {
  try {
    parse("quarter,A,B\n2010 Q1,1,2\n2010 Q2,1,abc\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.row(), 3);
    EXPECT_EQ(e.column(), 3);
  }
}

TEST(Csv, DuplicateSectorIsSchemaError) {
  EXPECT_THROW(parse("quarter,A,A\n2010 Q1,1,2\n"), SchemaError);
}

TEST(Csv, RaggedRowIsSchemaError) { EXPECT_THROW(parse("quarter,A,B\n2010 Q1,1\n"), SchemaError); }

TEST(Csv, OutOfOrderIsSchemaError) {
  EXPECT_THROW(parse("quarter,A\n2010 Q2,1\n2010 Q1,2\n"), SchemaError);
}

TEST(Csv, LevelScaleIsLogged) {
  CsvOptions opts;
  opts.scale = Scale::Level;
  const auto panel = parse("quarter,A\n2010 Q1,1\n2010 Q2,2.718281828459045\n", opts);
  EXPECT_EQ(panel.series("A")[0], 0.0);
  EXPECT_NEAR(panel.series("A")[1], 1.0, 1e-15);
}

TEST(Csv, LevelZeroIsDomainErrorNamingQuarter) {
  CsvOptions opts;
  opts.scale = Scale::Level;
  try {
    parse("quarter,A\n2010 Q1,1\n2010 Q2,0\n", opts);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("2010 Q2"), std::string::npos) << e.what();
  }
}

TEST(Csv, MissingFileIsIoError) { EXPECT_THROW(load_csv("/nonexistent/panel.csv"), IoError); }

TEST(Csv, WriteThenReadIsIdentity) {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> normal(18.0, 2.0);
  for (auto fmt : {QuarterFormat::Spaced, QuarterFormat::Compact}) {
    std::vector<NamedSeries> sectors;
    for (const char* code : {"FARM", "UTL", "GOV"}) {
      std::vector<double> v(25);
      for (auto& x : v) x = normal(rng);
      sectors.push_back({code, QuarterlySeries({2012, 3}, v)});
    }
    const PanelDataset panel(sectors, Provenance::CsvFile, "test");
    oracle::TempDir dir("csv");
    CsvOptions opts;
    opts.quarter_format = fmt;
    write_csv(dir.path() / "p.csv", panel, opts);
    const auto back = load_csv(dir.path() / "p.csv");
    ASSERT_EQ(back.sectors().size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ(back.sectors()[i].sector, sectors[i].sector);
      EXPECT_EQ(back.sectors()[i].series, sectors[i].series);
    }
  }
}

TEST(PanelDataset, EnforcesSharedWindowAndUniqueCodes) {
  const QuarterlySeries a({2010, 1}, {1, 2});
  const QuarterlySeries b({2010, 2}, {1, 2});
  EXPECT_THROW(PanelDataset({{"A", a}, {"B", b}}, Provenance::CsvFile, ""), AlignmentError);
  EXPECT_THROW(PanelDataset({{"A", a}, {"A", a}}, Provenance::CsvFile, ""), SchemaError);
  const PanelDataset ok({{"A", a}}, Provenance::CsvFile, "v1");
  EXPECT_TRUE(ok.contains("A"));
  EXPECT_FALSE(ok.contains("B"));
  EXPECT_THROW(ok.series("B"), DomainError);
}
