#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "shockcast/errors.hpp"
#include "shockcast/series.hpp"

namespace shockcast {

enum class Criterion { AIC, AICc, BIC };

std::string_view to_string(Criterion c);
// Accepts "aic", "aicc", "bic" in any case. Throws DomainError otherwise.
Criterion parse_criterion(std::string_view text);

// Shape of a multiplicative seasonal ARIMA(p,d,q)(P,D,Q)[season] model.
//
// AR polynomials follow (1 - sum phi_i L^i), MA polynomials (1 + sum theta_j L^j).
// `drift` adds a mean term to the differenced series; it is only meaningful for
// d + D <= 1 (a drift when d + D == 1, a constant mean when d + D == 0).
struct ArimaOrder {
  int p = 0;
  int d = 0;
  int q = 0;
  int P = 0;
  int D = 0;
  int Q = 0;
  int season = 4;
  bool drift = false;

  int num_coefficients() const noexcept { return p + q + P + Q; }
  // Free parameters counted by the information criteria, sigma2 included.
  int num_params() const noexcept { return num_coefficients() + (drift ? 1 : 0) + 1; }
  int differencing_loss() const noexcept { return d + D * season; }
  bool drift_permitted() const noexcept { return d + D <= 1; }

  // "ARIMA(1,1,0)(0,0,1)[4] with drift"
  std::string to_string() const;
  // Plain-language label such as "AR and seasonal MA with drift".
  std::string description() const;

  friend bool operator==(const ArimaOrder&, const ArimaOrder&) = default;
};

struct OrderLimits {
  int max_each = 5;
  int max_total = 10;
};

// Throws DomainError on negative orders, caps exceeded, or drift with d + D > 1.
void validate(const ArimaOrder& order, const OrderLimits& limits = {});

struct ArimaParams {
  std::vector<double> ar;
  std::vector<double> ma;
  std::vector<double> sar;
  std::vector<double> sma;
  double drift_mu = 0.0;
  double sigma2 = 1.0;
};

struct FittedArima {
  ArimaOrder order;
  ArimaParams params;
  double loglik = 0.0;
  double aic = 0.0;
  double aicc = 0.0;
  double bic = 0.0;
  int nobs = 0;
  QuarterlySeries residuals;
  Quarter train_end;

  double criterion(Criterion c) const;
};

// Smallest innovation variance the estimator will report.
inline constexpr double kSigma2Floor = 1e-12;

// True when (1 - sum c_i L^i) has every root strictly outside the unit circle.
bool is_stationary(std::span<const double> ar);
// True when (1 + sum c_i L^i) has every root strictly outside the unit circle.
bool is_invertible(std::span<const double> ma);

// Exact Gaussian log-likelihood of the differenced, mean-adjusted series under the
// given parameters.
//
// Throws ConstraintError for non-stationary / non-invertible coefficients or a
// non-positive sigma2, LengthError if too few observations remain after
// differencing, InstabilityError if the filter produces non-finite values.
double log_likelihood(const ArimaOrder& order, const ArimaParams& params, const QuarterlySeries& s);

// Maps an unconstrained vector to parameters inside the stationary / invertible
// region. Layout: [ar(p), ma(q), sar(P), sma(Q), drift_mu if order.drift].
// sigma2 is not part of the vector and is returned as 1.
ArimaParams transform_params(std::span<const double> unconstrained, const ArimaOrder& order);

// Inverse of transform_params. Throws ConstraintError for parameters on or outside
// the boundary of the region.
std::vector<double> inverse_transform(const ArimaParams& params, const ArimaOrder& order);

struct FitOptions {
  // Seeds the perturbation of restart points; fits are a pure function of
  // (series, order, options).
  std::uint64_t seed = 0;
  int max_restarts = 3;
  double rel_tol = 1e-8;
  int iterations_per_dim = 200;
  OrderLimits limits{};
};

// Maximum-likelihood fit with sigma2 concentrated out.
//
// Throws LengthError when fewer than num_params() + 2 observations remain after
// differencing and ConvergenceError when the optimizer cannot settle.
FittedArima fit(const ArimaOrder& order, const QuarterlySeries& s, const FitOptions& options = {});

// h-step point forecasts on the level scale, starting the quarter after
// model.train_end. `s` must be the series the model was fitted on.
QuarterlySeries forecast(const FittedArima& model, const QuarterlySeries& s, int h);

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> best_point, double best_value,
                   int iterations)
      : Error(what),
        best_point_(std::move(best_point)),
        best_value_(best_value),
        iterations_(iterations) {}

  // Best point seen, in the unconstrained parameterization.
  const std::vector<double>& best_point() const noexcept { return best_point_; }
  // Best negative log-likelihood seen.
  double best_value() const noexcept { return best_value_; }
  int iterations() const noexcept { return iterations_; }

 private:
  std::vector<double> best_point_;
  double best_value_;
  int iterations_;
};

}  // namespace shockcast
