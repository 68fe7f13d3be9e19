#include <algorithm>

#include "shockcast/errors.hpp"
#include "shockcast/fixture.hpp"

namespace shockcast {

const FixtureSector& GoldenFixture::sector(std::string_view code) const {
  auto it = std::find_if(sectors.begin(), sectors.end(), [&](const FixtureSector& s) { return s.code == code; });
  if (it == sectors.end()) throw DomainError("fixture has no sector " + std::string(code));
  return *it;
}

namespace {

template <typename Pick>
QuarterlySeries column(const GoldenFixture& f, std::string_view code, Pick pick) {
  const auto& rows = f.sector(code).rows;
  std::vector<double> values;
  values.reserve(rows.size());
  for (const auto& r : rows) values.push_back(pick(r));
  return QuarterlySeries(f.window_start, std::move(values));
}

}  // namespace

QuarterlySeries GoldenFixture::forecast_series(std::string_view code) const {
  return column(*this, code, [](const FixtureRow& r) { return r.forecast; });
}

QuarterlySeries GoldenFixture::printed_actual_series(std::string_view code) const {
  return column(*this, code, [](const FixtureRow& r) { return r.actual; });
}

QuarterlySeries GoldenFixture::actual_series(std::string_view code) const {
  return column(*this, code, [](const FixtureRow& r) { return r.forecast + r.impact; });
}

std::vector<NamedSeries> GoldenFixture::forecasts() const {
  std::vector<NamedSeries> out;
  for (const auto& s : sectors) out.push_back({s.code, forecast_series(s.code)});
  return out;
}

std::vector<NamedSeries> GoldenFixture::actuals() const {
  std::vector<NamedSeries> out;
  for (const auto& s : sectors) out.push_back({s.code, actual_series(s.code)});
  return out;
}

ImpactPanel GoldenFixture::impact_panel() const { return compute_impacts(forecasts(), actuals()); }

PanelDataset GoldenFixture::actual_panel() const {
  return PanelDataset(actuals(), Provenance::Fixture, "reference");
}

}  // namespace shockcast
