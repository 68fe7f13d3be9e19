#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "shockcast/series.hpp"

namespace shockcast {

enum class Provenance { CsvFile, Fixture, BeaApi };

std::string_view to_string(Provenance p);

// Log-scale sector series sharing one start quarter and one length.
class PanelDataset {
 public:
  // Throws SchemaError on duplicate codes and AlignmentError on mismatched windows.
  PanelDataset(std::vector<NamedSeries> sectors, Provenance provenance, std::string vintage);

  const std::vector<NamedSeries>& sectors() const noexcept { return sectors_; }
  Provenance provenance() const noexcept { return provenance_; }
  const std::string& vintage() const noexcept { return vintage_; }

  bool contains(std::string_view code) const noexcept;
  // Throws DomainError for unknown codes.
  const QuarterlySeries& series(std::string_view code) const;

  Quarter start() const { return sectors_.front().series.start(); }
  Quarter end() const { return sectors_.front().series.end(); }

 private:
  std::vector<NamedSeries> sectors_;
  Provenance provenance_;
  std::string vintage_;
};

}  // namespace shockcast
