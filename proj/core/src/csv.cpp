#include "shockcast/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "shockcast/errors.hpp"

namespace shockcast {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') s = s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = line.find(',', pos);
    cells.push_back(trim(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return cells;
}

std::optional<double> parse_number(std::string_view cell) {
  if (cell.empty()) return std::nullopt;
  if (cell.front() == '+') cell.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) return std::nullopt;
  return value;
}

std::string format_quarter(Quarter q, QuarterFormat format) {
  return format == QuarterFormat::Spaced ? q.to_string() : q.to_compact_string();
}

}  // namespace

PanelDataset read_csv(std::istream& in, const CsvOptions& options, const std::string& source) {
  std::string line;
  int row = 0;
  if (!std::getline(in, line)) throw SchemaError(source + ": empty file");
  ++row;
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);

  const auto header = split(line);
  if (header.size() < 2) throw SchemaError(source + ": header names no sector columns");
  std::vector<std::string> sectors;
  std::set<std::string, std::less<>> seen;
  for (std::size_t c = 1; c < header.size(); ++c) {
    std::string code(header[c]);
    if (code.empty()) throw SchemaError(source + ": empty sector name in column " + std::to_string(c + 1));
    if (!seen.insert(code).second) throw SchemaError(source + ": duplicate sector column " + code);
    sectors.push_back(std::move(code));
  }

  std::optional<Quarter> start;
  std::optional<Quarter> previous;
  std::vector<std::vector<double>> columns(sectors.size());
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) {
      throw SchemaError(source + ": row " + std::to_string(row) + " has " + std::to_string(cells.size()) +
                        " cells, expected " + std::to_string(header.size()));
    }
    Quarter q = [&] {
      try {
        return Quarter::parse(cells[0]);
      } catch (const DomainError& e) {
        throw ParseError(source + ": row " + std::to_string(row) + ", column 1: " + e.what(), row, 1);
      }
    }();
    if (previous) {
      if (q <= *previous) {
        throw SchemaError(source + ": quarter " + q.to_string() + " at row " + std::to_string(row) +
                          " is out of order or repeated");
      }
      if (q != previous->next()) {
        const Quarter missing = previous->next();
        throw GapError(source + ": missing quarter " + missing.to_string() + " before row " +
                           std::to_string(row),
                       missing);
      }
    } else {
      start = q;
    }
    previous = q;
    for (std::size_t c = 1; c < cells.size(); ++c) {
      const auto value = parse_number(cells[c]);
      if (!value) {
        throw ParseError(source + ": row " + std::to_string(row) + ", column " + std::to_string(c + 1) +
                             " (" + sectors[c - 1] + "): not a number: '" + std::string(cells[c]) + "'",
                         row, static_cast<int>(c + 1));
      }
      columns[c - 1].push_back(*value);
    }
  }
  if (!start) throw SchemaError(source + ": no data rows");

  std::vector<NamedSeries> named;
  named.reserve(sectors.size());
  for (std::size_t i = 0; i < sectors.size(); ++i) {
    QuarterlySeries series(*start, std::move(columns[i]));
    if (options.scale == Scale::Level) {
      try {
        series = log_transform(series);
      } catch (const DomainError& e) {
        throw DomainError(source + ": sector " + sectors[i] + ": " + e.what());
      }
    }
    named.push_back({sectors[i], std::move(series)});
  }
  return PanelDataset(std::move(named), Provenance::CsvFile, source);
}

PanelDataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return read_csv(in, options, path.string());
}

void write_csv(std::ostream& out, const PanelDataset& panel, const CsvOptions& options) {
  out << "quarter";
  for (const auto& s : panel.sectors()) out << ',' << s.sector;
  out << '\n';
  const auto& first = panel.sectors().front().series;
  char buffer[64];
  for (std::size_t i = 0; i < first.size(); ++i) {
    out << format_quarter(first.start() + static_cast<std::int64_t>(i), options.quarter_format);
    for (const auto& s : panel.sectors()) {
      std::snprintf(buffer, sizeof buffer, "%.17g", s.series[i]);
      out << ',' << buffer;
    }
    out << '\n';
  }
}

void write_csv(const std::filesystem::path& path, const PanelDataset& panel, const CsvOptions& options) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_csv(out, panel, options);
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace shockcast
