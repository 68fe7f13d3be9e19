#include "shockcast/shock.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "shockcast/errors.hpp"

namespace shockcast {

ImpactPanel::ImpactPanel(std::vector<SectorImpacts> sectors) : sectors_(std::move(sectors)) {
  if (sectors_.empty()) throw SchemaError("impact panel needs at least one sector");
  std::set<std::string, std::less<>> seen;
  const auto& reference = sectors_.front().records;
  if (reference.empty()) throw LengthError("impact panel window is empty");
  for (const auto& s : sectors_) {
    if (s.sector.empty()) throw SchemaError("empty sector code");
    if (!seen.insert(s.sector).second) throw SchemaError("duplicate sector " + s.sector);
    if (s.records.size() != reference.size()) {
      throw AlignmentError("sector " + s.sector + " has " + std::to_string(s.records.size()) +
                           " quarters, expected " + std::to_string(reference.size()));
    }
    for (std::size_t i = 0; i < s.records.size(); ++i) {
      if (s.records[i].quarter != reference.front().quarter + static_cast<std::int64_t>(i)) {
        throw AlignmentError("sector " + s.sector + " is not aligned with the panel window at " +
                             s.records[i].quarter.to_string());
      }
    }
  }
}

const SectorImpacts& ImpactPanel::sector(std::string_view code) const {
  auto it = std::find_if(sectors_.begin(), sectors_.end(),
                         [&](const SectorImpacts& s) { return s.sector == code; });
  if (it == sectors_.end()) throw DomainError("unknown sector " + std::string(code));
  return *it;
}

ImpactPanel compute_impacts(const std::vector<NamedSeries>& forecasts,
                            const std::vector<NamedSeries>& actuals) {
  if (forecasts.size() != actuals.size()) {
    throw AlignmentError("forecast and actual panels have different sector counts");
  }
  std::vector<SectorImpacts> sectors;
  sectors.reserve(forecasts.size());
  for (const auto& f : forecasts) {
    auto it = std::find_if(actuals.begin(), actuals.end(),
                           [&](const NamedSeries& a) { return a.sector == f.sector; });
    if (it == actuals.end()) throw AlignmentError("no actuals for sector " + f.sector);
    const auto& a = it->series;
    if (a.start() != f.series.start() || a.size() != f.series.size()) {
      throw AlignmentError("sector " + f.sector + ": forecast window " + f.series.start().to_string() +
                           " .. " + f.series.end().to_string() + " differs from actual window " +
                           a.start().to_string() + " .. " + a.end().to_string());
    }
    SectorImpacts si{f.sector, {}};
    si.records.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      si.records.push_back({f.series.start() + static_cast<std::int64_t>(i), f.series[i], a[i],
                            a[i] - f.series[i]});
    }
    sectors.push_back(std::move(si));
  }
  return ImpactPanel(std::move(sectors));
}

std::vector<AggregateImpact> aggregate_impacts(const ImpactPanel& panel) {
  std::vector<AggregateImpact> out;
  out.reserve(panel.window_length());
  for (std::size_t i = 0; i < panel.window_length(); ++i) {
    double sum = 0.0;
    for (const auto& s : panel.sectors()) sum += s.records[i].impact;
    out.push_back({panel.window_start() + static_cast<std::int64_t>(i), sum});
  }
  return out;
}

std::string_view to_string(Resilience r) {
  switch (r) {
    case Resilience::HighlyResilient: return "Highly Resilient";
    case Resilience::ModeratelyResilient: return "Moderately Resilient";
    case Resilience::LessResilient: return "Less Resilient";
    case Resilience::MinimallyResilient: return "Minimally Resilient";
  }
  return "Minimally Resilient";
}

Resilience parse_resilience(std::string_view text) {
  for (auto r : {Resilience::HighlyResilient, Resilience::ModeratelyResilient,
                 Resilience::LessResilient, Resilience::MinimallyResilient}) {
    if (text == to_string(r)) return r;
  }
  throw DomainError("unknown resilience category '" + std::string(text) + "'");
}

Resilience classify(const std::optional<Quarter>& turning, const ResilienceBands& bands) {
  if (!turning) return Resilience::MinimallyResilient;
  if (*turning <= bands.highly_through) return Resilience::HighlyResilient;
  if (*turning <= bands.moderately_through) return Resilience::ModeratelyResilient;
  if (*turning <= bands.less_through) return Resilience::LessResilient;
  return Resilience::MinimallyResilient;
}

TurningPoint turning_point(const SectorImpacts& impacts, const TurningPointOptions& options) {
  const auto& r = impacts.records;
  if (r.size() < 3) {
    throw LengthError("turning point needs at least 3 quarters, sector " + impacts.sector + " has " +
                      std::to_string(r.size()));
  }
  if (options.trough_position < 1 || static_cast<std::size_t>(options.trough_position) > r.size()) {
    throw LengthError("trough position " + std::to_string(options.trough_position) +
                      " lies outside the window");
  }
  const std::size_t trough = static_cast<std::size_t>(options.trough_position - 1);
  const std::size_t from = r[trough].impact > 0.0 ? 0 : trough + 1;

  TurningPoint tp{impacts.sector, std::nullopt, r.back().impact, Resilience::MinimallyResilient};
  for (std::size_t i = from; i < r.size(); ++i) {
    if (r[i].impact > 0.0) {
      tp.quarter = r[i].quarter;
      tp.impact_at_turn = r[i].impact;
      break;
    }
  }
  tp.category = classify(tp.quarter, options.bands);
  return tp;
}

VarianceDecomposition variance_decomposition(const ImpactPanel& panel, VarianceDivisor divisor) {
  const std::size_t n = panel.window_length();
  if (n < 2) throw LengthError("variance decomposition needs at least 2 quarters");
  VarianceDecomposition out;
  out.divisor = divisor;
  const double denom = static_cast<double>(divisor == VarianceDivisor::Sample ? n - 1 : n);
  double total = 0.0;
  for (const auto& s : panel.sectors()) {
    // Deviations from the first value keep constant series at exactly zero.
    const double shift = s.records.front().impact;
    double mean = 0.0;
    for (const auto& rec : s.records) mean += rec.impact - shift;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (const auto& rec : s.records) {
      const double dev = (rec.impact - shift) - mean;
      ss += dev * dev;
    }
    const double var = ss / denom;
    total += var;
    out.entries.push_back({s.sector, var, 0.0});
  }
  const double even = 100.0 / static_cast<double>(out.entries.size());
  for (auto& e : out.entries) e.contribution = total > 0.0 ? 100.0 * e.variance / total : even;
  return out;
}

ResilienceReport analyze(const ImpactPanel& panel, const TurningPointOptions& options,
                         VarianceDivisor divisor) {
  ResilienceReport report;
  for (const auto& s : panel.sectors()) report.turning_points.push_back(turning_point(s, options));
  report.aggregate = aggregate_impacts(panel);
  report.variance = variance_decomposition(panel, divisor);
  return report;
}

}  // namespace shockcast
