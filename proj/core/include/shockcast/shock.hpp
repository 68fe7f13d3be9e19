#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shockcast/series.hpp"

namespace shockcast {

// The 13 industry codes of the personal-income panel, in report order.
inline constexpr std::array<std::string_view, 13> kDefaultSectors = {
    "FARM", "UTL", "CONS", "MAN", "WHO", "RET", "TRANS", "FIN", "RE", "EDU", "HEA", "ACCF", "GOV"};

// impact == actual - forecast.
struct ImpactRecord {
  Quarter quarter;
  double forecast;
  double actual;
  double impact;
};

struct SectorImpacts {
  std::string sector;
  std::vector<ImpactRecord> records;
};

// Per-sector impact records over one shared window of consecutive quarters.
class ImpactPanel {
 public:
  // Throws AlignmentError unless every sector covers the same window, and
  // SchemaError on duplicate or empty sector codes.
  explicit ImpactPanel(std::vector<SectorImpacts> sectors);

  Quarter window_start() const noexcept { return sectors_.front().records.front().quarter; }
  std::size_t window_length() const noexcept { return sectors_.front().records.size(); }
  const std::vector<SectorImpacts>& sectors() const noexcept { return sectors_; }
  // Throws DomainError for unknown codes.
  const SectorImpacts& sector(std::string_view code) const;

 private:
  std::vector<SectorImpacts> sectors_;
};

// Pairs forecasts and actuals by sector (forecast order is kept). Throws
// AlignmentError when sector sets or windows differ.
ImpactPanel compute_impacts(const std::vector<NamedSeries>& forecasts,
                            const std::vector<NamedSeries>& actuals);

struct AggregateImpact {
  Quarter quarter;
  double impact;
};

// Unweighted per-quarter sum of sector impacts.
std::vector<AggregateImpact> aggregate_impacts(const ImpactPanel& panel);

enum class Resilience { HighlyResilient, ModeratelyResilient, LessResilient, MinimallyResilient };

std::string_view to_string(Resilience r);
// Accepts the labels produced by to_string(). Throws DomainError otherwise.
Resilience parse_resilience(std::string_view text);

// Last recovery quarter of each band; anything later (or no recovery) is
// MinimallyResilient.
struct ResilienceBands {
  Quarter highly_through{2020, 4};
  Quarter moderately_through{2021, 2};
  Quarter less_through{2022, 1};
};

Resilience classify(const std::optional<Quarter>& turning, const ResilienceBands& bands = {});

struct TurningPointOptions {
  // 1-based position of the trough quarter within the window.
  int trough_position = 2;
  ResilienceBands bands{};
};

struct TurningPoint {
  std::string sector;
  std::optional<Quarter> quarter;
  // Impact at the turning quarter, or at the final quarter when there is none.
  double impact_at_turn;
  Resilience category;
};

// Trough-gated first-positive rule. If the trough impact is already positive the
// turning point is the first positive quarter of the window; otherwise it is the
// first positive quarter after the trough. Throws LengthError for windows shorter
// than 3 quarters or shorter than the trough position.
TurningPoint turning_point(const SectorImpacts& impacts, const TurningPointOptions& options = {});

enum class VarianceDivisor { Sample, Population };

struct VarianceDecomposition {
  struct Entry {
    std::string sector;
    double variance;
    double contribution;  // percent of the summed variances
  };
  VarianceDivisor divisor = VarianceDivisor::Sample;
  std::vector<Entry> entries;
};

// Per-sector variance of the impact series and its share of the total. When every
// sector has zero variance the shares are split evenly. Throws LengthError for
// windows shorter than 2 quarters.
VarianceDecomposition variance_decomposition(const ImpactPanel& panel,
                                             VarianceDivisor divisor = VarianceDivisor::Sample);

struct ResilienceReport {
  std::vector<TurningPoint> turning_points;
  std::vector<AggregateImpact> aggregate;
  VarianceDecomposition variance;
};

ResilienceReport analyze(const ImpactPanel& panel, const TurningPointOptions& options = {},
                         VarianceDivisor divisor = VarianceDivisor::Sample);

}  // namespace shockcast
