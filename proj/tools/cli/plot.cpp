#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "shockcast/errors.hpp"

namespace shockcast::cli {

namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 420;
constexpr double kLeft = 80;
constexpr double kRight = 24;
constexpr double kTop = 48;
constexpr double kBottom = 84;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Vertical mapping that always includes zero so the baseline is on-chart.
struct YScale {
  double lo;
  double hi;

  static YScale covering(const std::vector<double>& values) {
    double lo = 0.0;
    double hi = 0.0;
    for (double v : values) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo < 1e-12) return {-1.0, 1.0};
    const double pad = 0.08 * (hi - lo);
    return {lo - pad, hi + pad};
  }

  double operator()(double v) const { return kTop + (hi - v) / (hi - lo) * (kHeight - kTop - kBottom); }
};

std::string header(const std::string& title) {
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
       "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<title>" + escape(title) + "</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) + "\" fill=\"#ffffff\"/>\n";
  s += "<text class=\"title\" x=\"" + num(kWidth / 2) + "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(title) + "</text>\n";
  return s;
}

std::string y_axis(const YScale& y) {
  std::string s;
  s += "<line class=\"axis\" x1=\"" + num(kLeft) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(kLeft) + "\" y2=\"" +
       num(kHeight - kBottom) + "\" stroke=\"#333333\"/>\n";
  constexpr int kTicks = 5;
  for (int i = 0; i < kTicks; ++i) {
    const double v = y.lo + (y.hi - y.lo) * i / (kTicks - 1);
    char label[32];
    std::snprintf(label, sizeof label, "%.3f", v);
    std::string text(label);
    if (text == "-0.000") text = "0.000";
    const double py = y(v);
    s += "<line class=\"grid\" x1=\"" + num(kLeft) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kWidth - kRight) +
         "\" y2=\"" + num(py) + "\" stroke=\"#e5e5e5\"/>\n";
    s += "<text x=\"" + num(kLeft - 6) + "\" y=\"" + num(py + 4) + "\" text-anchor=\"end\">" + text + "</text>\n";
  }
  return s;
}

std::string baseline(const YScale& y) {
  const double py = y(0.0);
  return "<line class=\"baseline\" x1=\"" + num(kLeft) + "\" y1=\"" + num(py) + "\" x2=\"" + num(kWidth - kRight) +
         "\" y2=\"" + num(py) + "\" stroke=\"#d62728\" stroke-dasharray=\"4 3\"/>\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string sector_chart_svg(const SectorReport& sector) {
  std::vector<double> values;
  for (const auto& r : sector.impacts) values.push_back(r.impact);
  const YScale y = YScale::covering(values);
  const std::size_t n = values.size();
  const double span = kWidth - kLeft - kRight;
  auto x = [&](std::size_t i) { return n <= 1 ? kLeft + span / 2 : kLeft + 20 + (span - 40) * i / (n - 1); };

  std::string s = header("Impact on " + sector.sector + " over quarters");
  s += y_axis(y);
  s += baseline(y);
  std::string points;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) points += ' ';
    points += num(x(i)) + "," + num(y(values[i]));
  }
  s += "<polyline class=\"impact\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = sector.impacts[i];
    const std::string q = r.quarter.to_string();
    s += "<circle class=\"point\" cx=\"" + num(x(i)) + "\" cy=\"" + num(y(values[i])) +
         "\" r=\"3\" fill=\"#1f77b4\" data-quarter=\"" + q + "\" data-value=\"" + format_fixed(r.impact) +
         "\"><title>" + q + ": " + format_fixed(r.impact) + "</title></circle>\n";
    s += "<text x=\"" + num(x(i)) + "\" y=\"" + num(kHeight - kBottom + 14) + "\" text-anchor=\"end\" transform=\"rotate(-45 " +
         num(x(i)) + " " + num(kHeight - kBottom + 14) + ")\">" + q + "</text>\n";
  }
  s += "<text x=\"18\" y=\"" + num((kTop + kHeight - kBottom) / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
       num((kTop + kHeight - kBottom) / 2) + ")\">Impact (log points)</text>\n";
  s += "</svg>\n";
  return s;
}

std::string trough_chart_svg(const RunReport& report, int trough_position) {
  std::vector<double> values;
  std::string quarter_label;
  for (const auto& sector : report.sectors) {
    const auto idx = static_cast<std::size_t>(trough_position - 1);
    if (trough_position < 1 || idx >= sector.impacts.size()) {
      throw WindowError("trough position outside the impact window for " + sector.sector);
    }
    values.push_back(sector.impacts[idx].impact);
    quarter_label = sector.impacts[idx].quarter.to_string();
  }
  const YScale y = YScale::covering(values);
  const std::size_t n = values.size();
  const double slot = n == 0 ? 0.0 : (kWidth - kLeft - kRight) / static_cast<double>(n);
  const double bar = slot * 0.7;

  std::string s = header("Initial sector response to shock (" + quarter_label + ")");
  s += y_axis(y);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& code = report.sectors[i].sector;
    const double v = values[i];
    const double top = std::min(y(v), y(0.0));
    const double height = std::abs(y(v) - y(0.0));
    const double left = kLeft + slot * i + (slot - bar) / 2;
    const bool positive = v > 0.0;
    s += "<rect class=\"bar " + std::string(positive ? "positive" : "negative") + "\" x=\"" + num(left) + "\" y=\"" +
         num(top) + "\" width=\"" + num(bar) + "\" height=\"" + num(height) + "\" fill=\"" +
         (positive ? "#2ca02c" : "#1f77b4") + "\" data-sector=\"" + escape(code) + "\" data-value=\"" + format_fixed(v) +
         "\"><title>" + escape(code) + ": " + format_fixed(v) + "</title></rect>\n";
    const double cx = left + bar / 2;
    s += "<text x=\"" + num(cx) + "\" y=\"" + num(kHeight - kBottom + 14) + "\" text-anchor=\"end\" transform=\"rotate(-45 " +
         num(cx) + " " + num(kHeight - kBottom + 14) + ")\">" + escape(code) + "</text>\n";
  }
  s += baseline(y);
  s += "</svg>\n";
  return s;
}

std::vector<std::filesystem::path> write_plots(const RunReport& report, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create " + out_dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& sector : report.sectors) {
    auto path = out_dir / ("impact_" + sector.sector + ".svg");
    write_file(path, sector_chart_svg(sector));
    written.push_back(path);
  }
  auto path = out_dir / "trough_response.svg";
  write_file(path, trough_chart_svg(report, report.config.trough_position));
  written.push_back(path);
  return written;
}

}  // namespace shockcast::cli
