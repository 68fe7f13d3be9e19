#pragma once

#include <span>
#include <string>
#include <vector>

#include "shockcast/quarter.hpp"

namespace shockcast {

// Contiguous quarterly observations anchored at a start quarter.
// Values are non-empty and finite; instances are immutable.
class QuarterlySeries {
 public:
  QuarterlySeries(Quarter start, std::vector<double> values);

  Quarter start() const noexcept { return start_; }
  Quarter end() const noexcept { return start_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  // Throws DomainError when q lies outside [start, end].
  double at(Quarter q) const;
  bool covers(Quarter q) const noexcept { return q >= start_ && q <= end(); }

  // Inclusive sub-window. Throws WindowError when not covered.
  QuarterlySeries slice(Quarter first, Quarter last) const;

  friend bool operator==(const QuarterlySeries&, const QuarterlySeries&) = default;

 private:
  Quarter start_;
  std::vector<double> values_;
};

// A sector-labelled series; panels keep these in a caller-defined order.
struct NamedSeries {
  std::string sector;
  QuarterlySeries series;
};

struct SeriesSummary {
  double min;
  double mean;
  double max;
};

// Elementwise natural log. Throws DomainError naming the first non-positive quarter.
QuarterlySeries log_transform(const QuarterlySeries& levels);

// Seasonal differencing (lag `season`) D times, then ordinary differencing d times.
// Output has len - d - D*season values and starts that many quarters later.
QuarterlySeries difference(const QuarterlySeries& s, int d, int D = 0, int season = 4);

// Inverse of difference(): `initial_values` are the first d + D*season values of the
// original series. Returns the reconstructed series, initials included.
QuarterlySeries integrate(const QuarterlySeries& diffed, int d, int D, int season,
                          std::span<const double> initial_values);

SeriesSummary summarize(const QuarterlySeries& s);

// Coefficients c[0..d+D*season] of (1-L)^d (1-L^season)^D, with c[0] == 1.
std::vector<double> differencing_polynomial(int d, int D, int season);

}  // namespace shockcast
