#include "shockcast/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <tuple>

namespace shockcast {

namespace {

constexpr double kTieTolerance = 1e-10;

auto order_key(const ArimaOrder& o) {
  return std::make_tuple(o.p, o.d, o.q, o.P, o.D, o.Q, o.season, o.drift);
}

struct OrderLess {
  bool operator()(const ArimaOrder& a, const ArimaOrder& b) const { return order_key(a) < order_key(b); }
};

class Evaluator {
 public:
  Evaluator(const QuarterlySeries& s, const SearchConfig& cfg) : series_(s), cfg_(cfg) {}

  // Fits `order` once; later calls return the cached outcome without touching the trace.
  const TraceEntry& evaluate(const ArimaOrder& order) {
    if (auto it = index_.find(order); it != index_.end()) return trace_[it->second];
    TraceEntry entry{order, std::nullopt, false, {}};
    try {
      FittedArima model = fit(order, series_, cfg_.fit_options);
      const double value = model.criterion(cfg_.criterion);
      if (std::isfinite(value)) {
        entry.value = value;
        models_.emplace(order, std::move(model));
      } else {
        entry.error = "non-finite criterion";
      }
    } catch (const Error& e) {
      entry.error = e.what();
    }
    index_.emplace(order, trace_.size());
    trace_.push_back(std::move(entry));
    return trace_.back();
  }

  void accept(const ArimaOrder& order) { trace_[index_.at(order)].accepted = true; }
  const FittedArima& model(const ArimaOrder& order) const { return models_.at(order); }
  SearchTrace take_trace() { return std::move(trace_); }
  const SearchTrace& trace() const { return trace_; }

 private:
  const QuarterlySeries& series_;
  const SearchConfig& cfg_;
  SearchTrace trace_;
  std::map<ArimaOrder, std::size_t, OrderLess> index_;
  std::map<ArimaOrder, FittedArima, OrderLess> models_;
};

bool within_caps(const ArimaOrder& o, const SearchConfig& cfg) {
  if (o.p < 0 || o.q < 0 || o.P < 0 || o.Q < 0) return false;
  if (o.p > cfg.max_p || o.q > cfg.max_q || o.P > cfg.max_P || o.Q > cfg.max_Q) return false;
  if (o.num_coefficients() > cfg.max_order) return false;
  if (o.drift && (!cfg.allow_drift || !o.drift_permitted())) return false;
  return true;
}

}  // namespace

double kpss_statistic(const QuarterlySeries& s) {
  const auto x = s.values();
  const std::size_t n = x.size();
  if (n < 8) throw LengthError("KPSS needs at least 8 observations, got " + std::to_string(n));
  if (std::all_of(x.begin(), x.end(), [&](double v) { return v == x.front(); })) return 0.0;

  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = x[i] - mean;

  double partial = 0.0;
  double sum_sq_partial = 0.0;
  for (double v : e) {
    partial += v;
    sum_sq_partial += partial * partial;
  }
  const double nd = static_cast<double>(n);
  const auto lags = static_cast<std::size_t>(std::floor(4.0 * std::pow(nd / 100.0, 0.25)));

  auto autocov = [&](std::size_t lag) {
    double acc = 0.0;
    for (std::size_t t = lag; t < n; ++t) acc += e[t] * e[t - lag];
    return acc / nd;
  };
  double long_run = autocov(0);
  for (std::size_t j = 1; j <= lags; ++j) {
    const double weight = 1.0 - static_cast<double>(j) / static_cast<double>(lags + 1);
    long_run += 2.0 * weight * autocov(j);
  }
  if (!(long_run > 0.0)) return 0.0;
  return sum_sq_partial / (nd * nd) / long_run;
}

int select_d(const QuarterlySeries& s, int max_d) {
  if (max_d < 0) throw DomainError("max_d must be non-negative");
  for (int d = 0; d < max_d; ++d) {
    const auto x = d == 0 ? s : difference(s, d, 0, 1);
    if (kpss_statistic(x) < kKpssCritical5) return d;
  }
  // Still validate the length at max_d so callers learn about short series.
  const auto last = max_d == 0 ? s : difference(s, max_d, 0, 1);
  if (last.size() < 8) throw LengthError("series too short to test d=" + std::to_string(max_d));
  return max_d;
}

bool search_prefers(const ArimaOrder& a, double value_a, const ArimaOrder& b, double value_b) {
  if (value_a < value_b - kTieTolerance) return true;
  if (value_a > value_b + kTieTolerance) return false;
  return std::make_tuple(a.num_params(), a.q, a.p, a.Q, a.P, a.drift) <
         std::make_tuple(b.num_params(), b.q, b.p, b.Q, b.P, b.drift);
}

SearchResult stepwise_search(const QuarterlySeries& s, const SearchConfig& cfg) {
  if (cfg.season < 1) throw DomainError("season must be positive");
  if (cfg.max_p < 0 || cfg.max_q < 0 || cfg.max_P < 0 || cfg.max_Q < 0 || cfg.max_d < 0 || cfg.D < 0) {
    throw DomainError("search caps must be non-negative");
  }
  const auto seasonal = cfg.D > 0 ? difference(s, 0, cfg.D, cfg.season) : s;
  const int d = select_d(seasonal, cfg.max_d);
  const bool seasonal_terms = cfg.season > 1;

  Evaluator eval(s, cfg);
  std::optional<ArimaOrder> incumbent;
  double incumbent_value = 0.0;

  auto consider = [&](const ArimaOrder& order) {
    const auto& entry = eval.evaluate(order);
    if (!entry.value) return;
    if (!incumbent || search_prefers(order, *entry.value, *incumbent, incumbent_value)) {
      incumbent = order;
      incumbent_value = *entry.value;
      eval.accept(order);
    }
  };

  const std::pair<int, int> starts[] = {{2, 2}, {0, 0}, {1, 0}, {0, 1}};
  const std::pair<int, int> seasonal_starts[] = {{1, 0}, {0, 0}, {0, 1}};
  for (auto [p, q] : starts) {
    for (auto [P, Q] : seasonal_starts) {
      if (!seasonal_terms && (P != 0 || Q != 0)) continue;
      for (bool drift : {true, false}) {
        ArimaOrder order{std::min(p, cfg.max_p), d, std::min(q, cfg.max_q),
                         std::min(P, cfg.max_P), cfg.D, std::min(Q, cfg.max_Q), cfg.season, drift};
        if (!within_caps(order, cfg)) continue;
        consider(order);
      }
    }
  }

  for (int step = 0; incumbent && step < 1000; ++step) {
    const ArimaOrder base = *incumbent;
    std::vector<ArimaOrder> moves;
    auto push = [&](ArimaOrder o) {
      if (within_caps(o, cfg)) moves.push_back(o);
    };
    for (int delta : {-1, 1}) {
      ArimaOrder o = base;
      o.p += delta;
      push(o);
      o = base;
      o.q += delta;
      push(o);
      if (seasonal_terms) {
        o = base;
        o.P += delta;
        push(o);
        o = base;
        o.Q += delta;
        push(o);
      }
    }
    {
      ArimaOrder o = base;
      o.drift = !o.drift;
      push(o);
    }

    std::optional<ArimaOrder> best_move;
    double best_value = 0.0;
    for (const auto& o : moves) {
      const auto& entry = eval.evaluate(o);
      if (!entry.value) continue;
      if (!best_move || search_prefers(o, *entry.value, *best_move, best_value)) {
        best_move = o;
        best_value = *entry.value;
      }
    }
    if (!best_move || !search_prefers(*best_move, best_value, base, incumbent_value)) break;
    incumbent = best_move;
    incumbent_value = best_value;
    eval.accept(*best_move);
  }

  if (!incumbent) {
    throw SearchError("no candidate model could be fitted", eval.take_trace());
  }
  FittedArima model = eval.model(*incumbent);
  return SearchResult{std::move(model), eval.take_trace()};
}

}  // namespace shockcast
