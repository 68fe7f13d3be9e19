#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shockcast/arima.hpp"
#include "shockcast/shock.hpp"

namespace shockcast::cli {

struct ModelSummary {
  // "fitted" for models estimated in this run, "fixture" for reported models.
  std::string source;
  std::string order;
  std::string description;
  std::optional<double> criterion_value;
  std::optional<double> loglik;
  std::optional<double> aic;
  std::optional<double> aicc;
  std::optional<double> bic;
  std::optional<ArimaParams> params;
};

struct SectorReport {
  std::string sector;
  ModelSummary model;
  std::vector<ImpactRecord> impacts;
  TurningPoint turning;
};

struct RunConfigEcho {
  std::string source;  // "fixture", "csv" or "bea"
  std::string data;
  Quarter train_end{2019, 4};
  int horizon = 14;
  Criterion criterion = Criterion::BIC;
  std::uint64_t seed = 0;
  int trough_position = 2;
  VarianceDivisor divisor = VarianceDivisor::Sample;
};

struct RunReport {
  std::string tool_version;
  RunConfigEcho config;
  std::vector<SectorReport> sectors;
  std::vector<AggregateImpact> aggregate;
  VarianceDecomposition variance;
};

// Stable key order, 8 fixed decimals for every real; identical reports give
// identical bytes.
std::string to_json(const RunReport& report);

// Throws SchemaError on malformed input.
RunReport report_from_json(std::string_view text);

// CSV projections of the report: impacts.csv, aggregate.csv, turning_points.csv,
// variance.csv. Returns the written paths.
std::vector<std::filesystem::path> write_csv_tables(const RunReport& report,
                                                    const std::filesystem::path& dir);

// Fixed 8-decimal rendering used throughout reports; never prints "-0.00000000".
std::string format_fixed(double value, int decimals = 8);

}  // namespace shockcast::cli
