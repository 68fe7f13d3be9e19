#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "shockcast/panel.hpp"

namespace shockcast {

enum class Scale { Log, Level };

enum class QuarterFormat {
  Spaced,   // "2010 Q1"
  Compact,  // "2010Q1"
};

struct CsvOptions {
  Scale scale = Scale::Log;
  // Format used when writing; reading accepts both.
  QuarterFormat quarter_format = QuarterFormat::Spaced;
};

// Wide panel CSV: header "quarter,<SECTOR>,...", one row per quarter, '.' decimals.
// Level-scale inputs are log-transformed on load.
//
// Errors: IoError (unreadable), GapError (missing quarter), ParseError (bad cell),
// SchemaError (duplicate sector, ragged rows), DomainError (non-positive level).
PanelDataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
PanelDataset read_csv(std::istream& in, const CsvOptions& options = {},
                      const std::string& source = "<stream>");

// Writes log-scale values with round-trip precision.
void write_csv(std::ostream& out, const PanelDataset& panel, const CsvOptions& options = {});
void write_csv(const std::filesystem::path& path, const PanelDataset& panel,
               const CsvOptions& options = {});

}  // namespace shockcast
