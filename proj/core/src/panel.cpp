#include "shockcast/panel.hpp"

#include <algorithm>
#include <set>

#include "shockcast/errors.hpp"

namespace shockcast {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::CsvFile: return "csv";
    case Provenance::Fixture: return "fixture";
    case Provenance::BeaApi: return "bea";
  }
  return "csv";
}

PanelDataset::PanelDataset(std::vector<NamedSeries> sectors, Provenance provenance, std::string vintage)
    : sectors_(std::move(sectors)), provenance_(provenance), vintage_(std::move(vintage)) {
  if (sectors_.empty()) throw SchemaError("panel has no sectors");
  std::set<std::string, std::less<>> seen;
  const auto& first = sectors_.front().series;
  for (const auto& s : sectors_) {
    if (!seen.insert(s.sector).second) throw SchemaError("duplicate sector " + s.sector);
    if (s.series.start() != first.start() || s.series.size() != first.size()) {
      throw AlignmentError("sector " + s.sector + " does not share the panel window " +
                           first.start().to_string() + " .. " + first.end().to_string());
    }
  }
}

bool PanelDataset::contains(std::string_view code) const noexcept {
  return std::any_of(sectors_.begin(), sectors_.end(), [&](const NamedSeries& s) { return s.sector == code; });
}

const QuarterlySeries& PanelDataset::series(std::string_view code) const {
  for (const auto& s : sectors_) {
    if (s.sector == code) return s.series;
  }
  throw DomainError("panel has no sector " + std::string(code));
}

}  // namespace shockcast
