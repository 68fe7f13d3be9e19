#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "shockcast/fixture.hpp"

namespace shockcast::cli {

enum class CheckStatus { Pass, Warn, Fail };

std::string_view to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  int count(CheckStatus s) const;
  // 0 when nothing failed (and, under strict, nothing warned); 1 otherwise.
  int exit_code(bool strict) const;
  void print(std::ostream& out, bool strict) const;
};

// Printed forecast/actual columns carry 5 decimals, so actual - forecast can
// differ from the printed impact by up to one unit in the 5th place.
inline constexpr double kRecordTolerance = 1e-5;
inline constexpr double kAggregateTolerance = 1e-6;
inline constexpr double kContributionTolerance = 0.05;
inline constexpr double kVarianceTolerance = 1e-4;

// True when `computed` is within one unit of the second significant figure of
// `printed` (the precision Table-style values are rounded to).
bool agrees_to_two_sf(double computed, double printed);

// Consistency suite over a fixture: record identities, per-quarter aggregates,
// turning points and variance shares against the reported tables. The two
// known transcription slips in the reported turning points (WHO quarter, RET
// value) are reported as warnings.
ValidationReport validate_fixture(const GoldenFixture& fixture);

}  // namespace shockcast::cli
