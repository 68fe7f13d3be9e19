#include "validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "shockcast/errors.hpp"

namespace shockcast::cli {

namespace {

std::string fmt(const char* pattern, double a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, pattern, a);
  return buf;
}

std::string fmt(const char* pattern, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

struct KnownSlip {
  const char* sector;
  const char* field;
};

// Reported turning-point entries that no consistent rule reproduces.
constexpr KnownSlip kKnownSlips[] = {{"WHO", "quarter"}, {"RET", "value"}};

bool is_known_slip(const std::string& sector, const char* field) {
  for (const auto& k : kKnownSlips) {
    if (sector == k.sector && std::string(field) == k.field) return true;
  }
  return false;
}

void check_records(const GoldenFixture& fx, std::vector<CheckResult>& out) {
  for (const auto& s : fx.sectors) {
    double worst = 0.0;
    std::string offender;
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      const auto& r = s.rows[i];
      const double dev = std::abs((r.actual - r.forecast) - r.impact);
      if (!(dev <= kRecordTolerance) && offender.empty()) {
        const Quarter q = fx.window_start + static_cast<std::int64_t>(i);
        offender = s.code + " q" + std::to_string(i + 1) + " (" + q.to_string() + "): actual - forecast = " +
                   fmt("%.8f", r.actual - r.forecast) + ", printed impact " + fmt("%.8f", r.impact);
      }
      if (!std::isfinite(dev)) worst = dev;
      else worst = std::max(worst, dev);
    }
    if (offender.empty()) {
      out.push_back({"record consistency " + s.code, CheckStatus::Pass,
                     std::to_string(s.rows.size()) + " records, max deviation " + fmt("%.2e", worst)});
    } else {
      out.push_back({"record consistency " + s.code, CheckStatus::Fail, offender});
    }
  }
}

void check_aggregate(const GoldenFixture& fx, const ImpactPanel& panel, std::vector<CheckResult>& out) {
  const auto computed = aggregate_impacts(panel);
  for (const auto& reported : fx.aggregate) {
    const std::string name = "aggregate " + reported.quarter.to_string();
    auto it = std::find_if(computed.begin(), computed.end(),
                           [&](const AggregateImpact& a) { return a.quarter == reported.quarter; });
    if (it == computed.end()) {
      out.push_back({name, CheckStatus::Fail, "quarter outside the impact window"});
      continue;
    }
    const double dev = std::abs(it->impact - reported.impact);
    out.push_back({name, dev <= kAggregateTolerance ? CheckStatus::Pass : CheckStatus::Fail,
                   fmt("computed %.8f, reported %.8f", it->impact, reported.impact)});
  }
}

void check_turning_points(const GoldenFixture& fx, const ImpactPanel& panel, std::vector<CheckResult>& out) {
  const Quarter window_end = panel.window_start() + static_cast<std::int64_t>(panel.window_length() - 1);
  for (const auto& reported : fx.turning_points) {
    const auto tp = turning_point(panel.sector(reported.sector));
    // A reported final-quarter label with no recovery means "no turning point".
    const bool quarter_ok =
        tp.quarter ? *tp.quarter == reported.quarter
                   : reported.quarter == window_end && reported.category == Resilience::MinimallyResilient;
    const std::string computed_q = tp.quarter ? tp.quarter->to_string() : "none";
    const auto status_for = [&](bool ok, const char* field) {
      if (ok) return CheckStatus::Pass;
      return is_known_slip(reported.sector, field) ? CheckStatus::Warn : CheckStatus::Fail;
    };

    std::string detail = "computed " + computed_q + ", reported " + reported.quarter.to_string();
    auto status = status_for(quarter_ok, "quarter");
    if (status == CheckStatus::Warn) detail += " (reported label looks like a transcription slip)";
    out.push_back({"turning point quarter " + reported.sector, status, detail});

    const bool value_ok = agrees_to_two_sf(tp.impact_at_turn, reported.impact);
    status = status_for(value_ok, "value");
    detail = fmt("computed %.8f, reported %g", tp.impact_at_turn, reported.impact);
    if (status == CheckStatus::Warn) detail += " (reported value looks like a transcription slip)";
    out.push_back({"turning point value " + reported.sector, status, detail});

    const bool category_ok = tp.category == reported.category;
    out.push_back({"resilience category " + reported.sector, status_for(category_ok, "quarter"),
                   "computed " + std::string(to_string(tp.category)) + ", reported " +
                       std::string(to_string(reported.category))});
  }
}

void check_variance(const GoldenFixture& fx, const ImpactPanel& panel, std::vector<CheckResult>& out) {
  const auto vd = variance_decomposition(panel, VarianceDivisor::Sample);
  for (const auto& reported : fx.variance) {
    auto it = std::find_if(vd.entries.begin(), vd.entries.end(),
                           [&](const auto& e) { return e.sector == reported.sector; });
    if (it == vd.entries.end()) {
      out.push_back({"variance share " + reported.sector, CheckStatus::Fail, "sector missing from panel"});
      continue;
    }
    const double dc = std::abs(it->contribution - reported.contribution);
    out.push_back({"variance share " + reported.sector, dc <= kContributionTolerance ? CheckStatus::Pass : CheckStatus::Fail,
                   fmt("computed %.4f%%, reported %.4f%%", it->contribution, reported.contribution)});
    const double dv = std::abs(it->variance - reported.variance);
    out.push_back({"variance " + reported.sector, dv <= kVarianceTolerance ? CheckStatus::Pass : CheckStatus::Fail,
                   fmt("computed %.6f, reported %.6f", it->variance, reported.variance)});
  }
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Warn: return "WARN";
    case CheckStatus::Fail: return "FAIL";
  }
  return "FAIL";
}

int ValidationReport::count(CheckStatus s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [&](const auto& c) { return c.status == s; }));
}

int ValidationReport::exit_code(bool strict) const {
  if (count(CheckStatus::Fail) > 0) return 1;
  if (strict && count(CheckStatus::Warn) > 0) return 1;
  return 0;
}

void ValidationReport::print(std::ostream& out, bool strict) const {
  char line[512];
  for (const auto& c : checks) {
    std::string_view status = to_string(c.status);
    if (strict && c.status == CheckStatus::Warn) status = "FAIL";
    std::snprintf(line, sizeof line, "%-4s  %-32s  %s\n", std::string(status).c_str(), c.name.c_str(), c.detail.c_str());
    out << line;
  }
  const int warns = count(CheckStatus::Warn);
  const int fails = count(CheckStatus::Fail) + (strict ? warns : 0);
  out << "summary: " << count(CheckStatus::Pass) << " passed, " << (strict ? 0 : warns) << " warnings, " << fails
      << " failed\n";
}

bool agrees_to_two_sf(double computed, double printed) {
  if (printed == 0.0) return std::abs(computed) < 1e-12;
  const double unit = std::pow(10.0, std::floor(std::log10(std::abs(printed))) - 1.0);
  return std::abs(computed - printed) < unit;
}

ValidationReport validate_fixture(const GoldenFixture& fixture) {
  ValidationReport report;
  check_records(fixture, report.checks);
  try {
    const ImpactPanel panel = fixture.impact_panel();
    check_aggregate(fixture, panel, report.checks);
    check_turning_points(fixture, panel, report.checks);
    check_variance(fixture, panel, report.checks);
  } catch (const Error& e) {
    report.checks.push_back({"impact panel", CheckStatus::Fail, e.what()});
  }
  return report;
}

}  // namespace shockcast::cli
