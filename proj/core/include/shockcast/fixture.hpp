#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shockcast/panel.hpp"
#include "shockcast/shock.hpp"

namespace shockcast {

// One reference row, exactly as printed (forecast/actual at 5 decimals, impact at
// 8-10 significant digits).
struct FixtureRow {
  double forecast;
  double actual;
  double impact;
};

struct FixtureSector {
  std::string code;
  std::string name;
  // Selected model and BIC as reported for the pre-shock fit.
  std::string reported_model;
  std::string reported_description;
  double reported_bic;
  std::vector<FixtureRow> rows;
};

struct ReportedSummary {
  std::string sector;
  double min;
  double mean;
  double max;
};

// Turning-point row as printed; sectors without recovery list the final quarter.
struct ReportedTurningPoint {
  std::string sector;
  Quarter quarter;
  double impact;
  Resilience category;
};

struct ReportedVariance {
  std::string sector;
  double variance;
  double contribution;
};

// Reference dataset for the 2020 Q1 - 2023 Q2 shock window: per-sector
// forecast/actual/impact records plus the published summary tables.
struct GoldenFixture {
  Quarter window_start{2020, 1};
  std::vector<FixtureSector> sectors;
  std::vector<AggregateImpact> aggregate;
  std::vector<ReportedTurningPoint> turning_points;
  std::vector<ReportedVariance> variance;
  std::vector<ReportedSummary> summaries;

  // Throws DomainError for unknown codes.
  const FixtureSector& sector(std::string_view code) const;

  QuarterlySeries forecast_series(std::string_view code) const;
  QuarterlySeries printed_actual_series(std::string_view code) const;
  // Actuals at the precision of the impact column (forecast + impact). The
  // printed 5-decimal actuals agree with these to within rounding.
  QuarterlySeries actual_series(std::string_view code) const;

  std::vector<NamedSeries> forecasts() const;
  std::vector<NamedSeries> actuals() const;
  ImpactPanel impact_panel() const;
  // Actuals as a log-scale panel dataset.
  PanelDataset actual_panel() const;
};

// The embedded reference fixture.
const GoldenFixture& load_fixture();

std::string fixture_to_json(const GoldenFixture& fixture);
// Throws SchemaError on malformed documents.
GoldenFixture fixture_from_json(std::string_view text);

}  // namespace shockcast
