#include "shockcast/series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "shockcast/errors.hpp"

namespace shockcast {

namespace {

void check_orders(int d, int D, int season) {
  if (d < 0 || D < 0) throw DomainError("differencing orders must be non-negative");
  if (season < 1) throw DomainError("season must be positive");
}

std::vector<double> diff_once(const std::vector<double>& x, std::size_t lag) {
  std::vector<double> out(x.size() - lag);
  for (std::size_t i = lag; i < x.size(); ++i) out[i - lag] = x[i] - x[i - lag];
  return out;
}

}  // namespace

QuarterlySeries::QuarterlySeries(Quarter start, std::vector<double> values)
    : start_(start), values_(std::move(values)) {
  if (values_.empty()) throw LengthError("quarterly series must not be empty");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("non-finite value at " +
                        (start_ + static_cast<std::int64_t>(i)).to_string());
    }
  }
}

double QuarterlySeries::at(Quarter q) const {
  if (!covers(q)) {
    throw DomainError(q.to_string() + " is outside " + start_.to_string() + " .. " +
                      end().to_string());
  }
  return values_[static_cast<std::size_t>(q - start_)];
}

QuarterlySeries QuarterlySeries::slice(Quarter first, Quarter last) const {
  if (last < first || !covers(first) || !covers(last)) {
    throw WindowError("window " + first.to_string() + " .. " + last.to_string() +
                      " is not covered by " + start_.to_string() + " .. " + end().to_string());
  }
  auto begin = values_.begin() + (first - start_);
  auto finish = values_.begin() + (last - start_) + 1;
  return QuarterlySeries(first, std::vector<double>(begin, finish));
}

QuarterlySeries log_transform(const QuarterlySeries& levels) {
  std::vector<double> out(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (!(levels[i] > 0.0)) {
      throw DomainError("cannot take log of non-positive value " + std::to_string(levels[i]) +
                        " at " + (levels.start() + static_cast<std::int64_t>(i)).to_string());
    }
    out[i] = std::log(levels[i]);
  }
  return QuarterlySeries(levels.start(), std::move(out));
}

QuarterlySeries difference(const QuarterlySeries& s, int d, int D, int season) {
  check_orders(d, D, season);
  const std::size_t loss = static_cast<std::size_t>(d) + static_cast<std::size_t>(D) * season;
  if (s.size() <= loss) {
    throw LengthError("series of length " + std::to_string(s.size()) +
                      " is too short for d=" + std::to_string(d) + ", D=" + std::to_string(D) +
                      ", season=" + std::to_string(season));
  }
  std::vector<double> x(s.values().begin(), s.values().end());
  for (int i = 0; i < D; ++i) x = diff_once(x, static_cast<std::size_t>(season));
  for (int i = 0; i < d; ++i) x = diff_once(x, 1);
  return QuarterlySeries(s.start() + static_cast<std::int64_t>(loss), std::move(x));
}

std::vector<double> differencing_polynomial(int d, int D, int season) {
  check_orders(d, D, season);
  std::vector<double> poly{1.0};
  auto multiply_by = [&](std::size_t lag) {
    std::vector<double> out(poly.size() + lag, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      out[i] += poly[i];
      out[i + lag] -= poly[i];
    }
    poly = std::move(out);
  };
  for (int i = 0; i < D; ++i) multiply_by(static_cast<std::size_t>(season));
  for (int i = 0; i < d; ++i) multiply_by(1);
  return poly;
}

QuarterlySeries integrate(const QuarterlySeries& diffed, int d, int D, int season,
                          std::span<const double> initial_values) {
  check_orders(d, D, season);
  const std::size_t loss = static_cast<std::size_t>(d) + static_cast<std::size_t>(D) * season;
  if (initial_values.size() != loss) {
    throw ArityError("integration needs " + std::to_string(loss) + " initial values, got " +
                     std::to_string(initial_values.size()));
  }
  // Undo ordinary differencing first, then seasonal, mirroring difference().
  // Each stage needs the initials of the matching intermediate series, which are
  // recovered by differencing the original initial block.
  std::vector<std::vector<double>> stage_initials;
  {
    std::vector<double> x(initial_values.begin(), initial_values.end());
    std::vector<std::vector<double>> chain{x};
    for (int i = 0; i < D; ++i) chain.push_back(diff_once(chain.back(), static_cast<std::size_t>(season)));
    for (int i = 0; i < d; ++i) chain.push_back(diff_once(chain.back(), 1));
    // chain[k] is the initial block of the k-th intermediate series (k = 0 is the original).
    stage_initials = std::move(chain);
  }

  std::vector<double> x(diffed.values().begin(), diffed.values().end());
  std::size_t stage = stage_initials.size() - 1;
  auto undo = [&](std::size_t lag) {
    --stage;
    const auto& head = stage_initials[stage];
    // The first `lag` values of this stage's series.
    std::vector<double> out(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(lag));
    out.reserve(lag + x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] + out[i]);
    x = std::move(out);
  };
  for (int i = 0; i < d; ++i) undo(1);
  for (int i = 0; i < D; ++i) undo(static_cast<std::size_t>(season));
  return QuarterlySeries(diffed.start() - static_cast<std::int64_t>(loss), std::move(x));
}

SeriesSummary summarize(const QuarterlySeries& s) {
  auto v = s.values();
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  // Guard the invariant against last-bit rounding of the mean.
  mean = std::clamp(mean, *lo, *hi);
  return {*lo, mean, *hi};
}

}  // namespace shockcast
