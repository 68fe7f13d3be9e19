#include "shockcast/arima.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "polynomial.hpp"
#include "shockcast/optimizer.hpp"
#include "state_space.hpp"

namespace shockcast {

namespace {

constexpr double kLog2Pi = 1.8378770664093454835606594728112;  // ln(2*pi)

std::vector<double> negated(std::span<const double> v) {
  std::vector<double> out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](double x) { return -x; });
  return out;
}

void check_param_shapes(const ArimaOrder& order, const ArimaParams& params) {
  if (params.ar.size() != static_cast<std::size_t>(order.p) ||
      params.ma.size() != static_cast<std::size_t>(order.q) ||
      params.sar.size() != static_cast<std::size_t>(order.P) ||
      params.sma.size() != static_cast<std::size_t>(order.Q)) {
    throw ArityError("coefficient counts do not match " + order.to_string());
  }
}

detail::ArmaStateSpace state_space_for(const ArimaOrder& order, const ArimaParams& params) {
  const auto phi = detail::expand_ar(params.ar, params.sar, order.season);
  const auto theta = detail::expand_ma(params.ma, params.sma, order.season);
  return detail::make_state_space(phi, theta);
}

std::vector<double> demeaned(std::span<const double> w, double mu) {
  std::vector<double> y(w.size());
  std::transform(w.begin(), w.end(), y.begin(), [mu](double x) { return x - mu; });
  return y;
}

double gaussian_loglik(const detail::FilterResult& fr, double sigma2) {
  const double n = static_cast<double>(fr.innovations.size());
  return -0.5 * (n * (kLog2Pi + std::log(sigma2)) + fr.sum_log_variance +
                 fr.sum_scaled_squares / sigma2);
}

struct Concentrated {
  double loglik;
  double sigma2;
  detail::FilterResult filter;
};

// Log-likelihood maximized over sigma2 for fixed coefficients and mean.
Concentrated concentrated_loglik(const ArimaOrder& order, const ArimaParams& params,
                                 std::span<const double> w) {
  const auto model = state_space_for(order, params);
  auto fr = detail::kalman_filter(model, demeaned(w, params.drift_mu));
  const double n = static_cast<double>(w.size());
  double sigma2 = fr.sum_scaled_squares / n;
  double ll;
  if (sigma2 < kSigma2Floor) {
    sigma2 = kSigma2Floor;
    ll = gaussian_loglik(fr, sigma2);
  } else {
    ll = -0.5 * (n * (kLog2Pi + std::log(sigma2)) + fr.sum_log_variance + n);
  }
  return {ll, sigma2, std::move(fr)};
}

double mean_of(std::span<const double> v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double population_sd(std::span<const double> v) {
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size()));
}

}  // namespace

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::AIC: return "aic";
    case Criterion::AICc: return "aicc";
    case Criterion::BIC: return "bic";
  }
  return "bic";
}

Criterion parse_criterion(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "aic") return Criterion::AIC;
  if (lower == "aicc") return Criterion::AICc;
  if (lower == "bic") return Criterion::BIC;
  throw DomainError("unknown criterion '" + std::string(text) + "' (expected aic, aicc or bic)");
}

std::string ArimaOrder::to_string() const {
  std::string out = "ARIMA(" + std::to_string(p) + "," + std::to_string(d) + "," +
                    std::to_string(q) + ")";
  if (P != 0 || D != 0 || Q != 0) {
    out += "(" + std::to_string(P) + "," + std::to_string(D) + "," + std::to_string(Q) + ")[" +
           std::to_string(season) + "]";
  }
  if (drift) out += (d + D == 0) ? " with non-zero mean" : " with drift";
  return out;
}

std::string ArimaOrder::description() const {
  std::vector<std::string> parts;
  if (p > 0) parts.emplace_back("AR");
  if (q > 0) parts.emplace_back("MA");
  if (P > 0) parts.emplace_back("seasonal AR");
  if (Q > 0) parts.emplace_back("seasonal MA");
  std::string out;
  if (parts.empty()) {
    out = (d + D == 0) ? "white noise" : "random walk";
  } else {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += " and ";
      out += parts[i];
    }
  }
  out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  if (d == 2) out += " with double differencing";
  else if (d > 2) out += " with " + std::to_string(d) + "-fold differencing";
  if (drift) out += (d + D == 0) ? " with non-zero mean" : " with drift";
  return out;
}

void validate(const ArimaOrder& order, const OrderLimits& limits) {
  const int orders[] = {order.p, order.d, order.q, order.P, order.D, order.Q};
  for (int v : orders) {
    if (v < 0) throw DomainError("negative order in " + order.to_string());
  }
  if (order.season < 1) throw DomainError("season must be positive");
  for (int v : {order.p, order.q, order.P, order.Q}) {
    if (v > limits.max_each) {
      throw DomainError(order.to_string() + " exceeds the per-term cap of " +
                        std::to_string(limits.max_each));
    }
  }
  if (order.num_coefficients() > limits.max_total) {
    throw DomainError(order.to_string() + " exceeds the total order cap of " +
                      std::to_string(limits.max_total));
  }
  if (order.drift && !order.drift_permitted()) {
    throw DomainError("drift is only allowed when d + D <= 1: " + order.to_string());
  }
}

double FittedArima::criterion(Criterion c) const {
  switch (c) {
    case Criterion::AIC: return aic;
    case Criterion::AICc: return aicc;
    case Criterion::BIC: return bic;
  }
  return bic;
}

bool is_stationary(std::span<const double> ar) { return detail::is_stable(ar); }

bool is_invertible(std::span<const double> ma) { return detail::is_stable(negated(ma)); }

double log_likelihood(const ArimaOrder& order, const ArimaParams& params, const QuarterlySeries& s) {
  validate(order, OrderLimits{1 << 20, 1 << 20});
  check_param_shapes(order, params);
  if (!is_stationary(params.ar) || !is_stationary(params.sar)) {
    throw ConstraintError("AR coefficients are not stationary");
  }
  if (!is_invertible(params.ma) || !is_invertible(params.sma)) {
    throw ConstraintError("MA coefficients are not invertible");
  }
  if (!(params.sigma2 > 0.0) || !std::isfinite(params.sigma2)) {
    throw ConstraintError("sigma2 must be positive");
  }
  if (s.size() < static_cast<std::size_t>(order.differencing_loss()) + 2) {
    throw LengthError("need more than " + std::to_string(order.differencing_loss() + 1) +
                      " observations for " + order.to_string());
  }
  const auto w = difference(s, order.d, order.D, order.season);
  const double mu = order.drift ? params.drift_mu : 0.0;
  const auto model = state_space_for(order, params);
  const auto fr = detail::kalman_filter(model, demeaned(w.values(), mu));
  const double ll = gaussian_loglik(fr, params.sigma2);
  if (!std::isfinite(ll)) throw InstabilityError("log-likelihood is not finite");
  return ll;
}

ArimaParams transform_params(std::span<const double> unconstrained, const ArimaOrder& order) {
  const std::size_t expected = static_cast<std::size_t>(order.num_coefficients() + (order.drift ? 1 : 0));
  if (unconstrained.size() != expected) {
    throw ArityError("expected " + std::to_string(expected) + " unconstrained values for " +
                     order.to_string() + ", got " + std::to_string(unconstrained.size()));
  }
  ArimaParams params;
  std::size_t at = 0;
  auto take = [&](int count) {
    auto part = unconstrained.subspan(at, static_cast<std::size_t>(count));
    at += static_cast<std::size_t>(count);
    return detail::pacf_to_coefficients(part);
  };
  params.ar = take(order.p);
  params.ma = negated(take(order.q));
  params.sar = take(order.P);
  params.sma = negated(take(order.Q));
  params.drift_mu = order.drift ? unconstrained[at] : 0.0;
  params.sigma2 = 1.0;
  return params;
}

std::vector<double> inverse_transform(const ArimaParams& params, const ArimaOrder& order) {
  check_param_shapes(order, params);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(order.num_coefficients() + 1));
  std::vector<double> part;
  auto append = [&](std::span<const double> coefficients, const char* what) {
    if (!detail::coefficients_to_pacf(coefficients, part)) {
      throw ConstraintError(std::string(what) + " coefficients lie outside the admissible region");
    }
    out.insert(out.end(), part.begin(), part.end());
  };
  append(params.ar, "AR");
  append(negated(params.ma), "MA");
  append(params.sar, "seasonal AR");
  append(negated(params.sma), "seasonal MA");
  if (order.drift) out.push_back(params.drift_mu);
  return out;
}

FittedArima fit(const ArimaOrder& order, const QuarterlySeries& s, const FitOptions& options) {
  validate(order, options.limits);
  const int k = order.num_params();
  const int loss = order.differencing_loss();
  if (static_cast<int>(s.size()) - loss < k + 2) {
    throw LengthError(order.to_string() + " needs at least " + std::to_string(k + 2 + loss) +
                      " observations, got " + std::to_string(s.size()));
  }
  const auto w = difference(s, order.d, order.D, order.season);
  const auto wv = w.values();
  const int nobs = static_cast<int>(wv.size());

  const int ncoef = order.num_coefficients();
  const int dim = ncoef + (order.drift ? 1 : 0);
  const double mu0 = order.drift ? mean_of(wv) : 0.0;
  // The drift coordinate is searched in units of the sample spread so a unit
  // simplex step means the same thing for log-income and for unit-variance data.
  double mu_scale = population_sd(wv);
  if (!(mu_scale > 0.0)) mu_scale = 1e-6 * std::max(1.0, std::abs(mu0));

  std::vector<double> u(static_cast<std::size_t>(dim));
  auto to_params = [&](std::span<const double> x) {
    std::copy(x.begin(), x.begin() + ncoef, u.begin());
    if (order.drift) u[static_cast<std::size_t>(ncoef)] = mu0 + mu_scale * x[static_cast<std::size_t>(ncoef)];
    return transform_params(u, order);
  };
  auto objective = [&](std::span<const double> x) {
    try {
      return -concentrated_loglik(order, to_params(x), wv).loglik;
    } catch (const InstabilityError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  NelderMeadOptions nm;
  nm.rel_tol = options.rel_tol;
  nm.max_iterations = options.iterations_per_dim * std::max(dim, 1);

  NelderMeadResult best = nelder_mead(objective, std::vector<double>(static_cast<std::size_t>(dim), 0.0), nm);
  bool settled = best.converged;
  int iterations = best.iterations;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> jitter(0.0, 0.1);
  for (int r = 0; r < options.max_restarts && dim > 0; ++r) {
    std::vector<double> start = best.x;
    for (double& v : start) v += jitter(rng);
    NelderMeadResult again = nelder_mead(objective, std::move(start), nm);
    iterations += again.iterations;
    const double tol = options.rel_tol * (std::abs(best.value) + options.rel_tol);
    const bool improved = again.value < best.value - tol;
    const bool again_converged = again.converged;
    if (again.value < best.value) best = std::move(again);
    if (!improved) {
      settled = settled || again_converged;
      break;
    }
    settled = again_converged;
  }

  if (!std::isfinite(best.value) || !settled) {
    throw ConvergenceError("optimizer did not converge for " + order.to_string() +
                               " (best -loglik " + std::to_string(best.value) + ")",
                           best.x, best.value, iterations);
  }

  ArimaParams params = to_params(best.x);
  auto conc = concentrated_loglik(order, params, wv);
  params.sigma2 = conc.sigma2;

  std::vector<double> residuals(conc.filter.innovations.size());
  for (std::size_t t = 0; t < residuals.size(); ++t) {
    residuals[t] = conc.filter.innovations[t] / std::sqrt(conc.sigma2 * conc.filter.variances[t]);
  }

  const double n = static_cast<double>(nobs);
  const double kd = static_cast<double>(k);
  const double aic = -2.0 * conc.loglik + 2.0 * kd;
  return FittedArima{
      .order = order,
      .params = std::move(params),
      .loglik = conc.loglik,
      .aic = aic,
      .aicc = aic + 2.0 * kd * (kd + 1.0) / (n - kd - 1.0),
      .bic = -2.0 * conc.loglik + kd * std::log(n),
      .nobs = nobs,
      .residuals = QuarterlySeries(w.start(), std::move(residuals)),
      .train_end = s.end(),
  };
}

QuarterlySeries forecast(const FittedArima& model, const QuarterlySeries& s, int h) {
  if (h <= 0) throw DomainError("forecast horizon must be positive, got " + std::to_string(h));
  if (s.end() != model.train_end) {
    throw DomainError("series ends " + s.end().to_string() + " but the model was trained through " +
                      model.train_end.to_string());
  }
  const auto& order = model.order;
  const auto w = difference(s, order.d, order.D, order.season);
  const double mu = order.drift ? model.params.drift_mu : 0.0;
  const auto ss = state_space_for(order, model.params);
  const auto fr = detail::kalman_filter(ss, demeaned(w.values(), mu));
  const auto arma = detail::propagate_mean(ss, fr.next_state, h);

  const auto delta = differencing_polynomial(order.d, order.D, order.season);
  const std::size_t m = delta.size() - 1;
  const auto sv = s.values();
  std::vector<double> history(sv.end() - static_cast<std::ptrdiff_t>(m), sv.end());
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(h));
  for (int step = 0; step < h; ++step) {
    double x = arma[static_cast<std::size_t>(step)] + mu;
    for (std::size_t i = 1; i <= m; ++i) x -= delta[i] * history[history.size() - i];
    history.push_back(x);
    out.push_back(x);
  }
  return QuarterlySeries(model.train_end.next(), std::move(out));
}

}  // namespace shockcast
