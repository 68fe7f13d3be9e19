#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shockcast/arima.hpp"

namespace shockcast {

// 5% critical value of the KPSS level-stationarity statistic.
inline constexpr double kKpssCritical5 = 0.463;

struct SearchConfig {
  int max_p = 5;
  int max_q = 5;
  int max_P = 2;
  int max_Q = 2;
  int max_d = 2;
  // Seasonal differencing order; fixed rather than tested.
  int D = 0;
  int season = 4;
  // Upper bound on p + q + P + Q.
  int max_order = 10;
  Criterion criterion = Criterion::BIC;
  bool allow_drift = true;
  FitOptions fit_options{};
};

struct TraceEntry {
  ArimaOrder order;
  // Empty when the fit failed; `error` then holds the reason.
  std::optional<double> value;
  bool accepted = false;
  std::string error;
};

using SearchTrace = std::vector<TraceEntry>;

struct SearchResult {
  FittedArima model;
  SearchTrace trace;
};

class SearchError : public Error {
 public:
  SearchError(const std::string& what, SearchTrace trace) : Error(what), trace_(std::move(trace)) {}
  const SearchTrace& trace() const noexcept { return trace_; }

 private:
  SearchTrace trace_;
};

// KPSS level statistic with Bartlett long-run variance and lag floor(4 (n/100)^0.25).
// Throws LengthError for fewer than 8 observations.
double kpss_statistic(const QuarterlySeries& s);

// Smallest d <= max_d whose d-th difference passes KPSS at 5%; max_d if none do.
int select_d(const QuarterlySeries& s, int max_d);

// Stepwise order search: picks d by KPSS, evaluates a fixed set of starting
// models, then hill-climbs over single-step moves until no neighbour improves
// the information criterion.
SearchResult stepwise_search(const QuarterlySeries& s, const SearchConfig& cfg = {});

// Criterion-with-tie-break ordering used by the search: lower value first, and
// within 1e-10 fewer parameters, then lower q, then lower p.
bool search_prefers(const ArimaOrder& a, double value_a, const ArimaOrder& b, double value_b);

}  // namespace shockcast
