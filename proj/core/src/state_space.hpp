#pragma once

#include <span>
#include <vector>

namespace shockcast::detail {

// Harvey-form state space of a stationary ARMA process in units of sigma2:
//   y_t       = Z a_t,                 Z = (1, 0, ..., 0)
//   a_{t+1}   = T a_t + R eps_{t+1},   T = [phi | I; 0], R = (1, theta_1, ..., theta_{r-1})
// with r = max(p, q + 1) and stationary P0 solving P0 = T P0 T' + R R'.
struct ArmaStateSpace {
  int dim = 1;
  std::vector<double> phi;    // length dim, zero padded
  std::vector<double> r_vec;  // length dim, r_vec[0] == 1
  std::vector<double> p0;     // dim x dim, row-major
};

// Throws InstabilityError when the fixed-point system is singular or P0 is not a
// valid covariance.
ArmaStateSpace make_state_space(std::span<const double> phi, std::span<const double> theta);

struct FilterResult {
  std::vector<double> innovations;   // v_t
  std::vector<double> variances;     // F_t in units of sigma2
  double sum_log_variance = 0.0;     // sum ln F_t
  double sum_scaled_squares = 0.0;   // sum v_t^2 / F_t
  std::vector<double> next_state;    // a_{n+1|n}
};

// Runs the Kalman filter on a zero-mean series. Throws InstabilityError on a
// non-positive or non-finite innovation variance.
FilterResult kalman_filter(const ArmaStateSpace& model, std::span<const double> y);

// Point forecasts E[y_{n+h} | y_1..y_n] for h = 1..horizon from a_{n+1|n}.
std::vector<double> propagate_mean(const ArmaStateSpace& model, std::span<const double> next_state,
                                   int horizon);

}  // namespace shockcast::detail
