#pragma once

#include <span>
#include <vector>

namespace shockcast::detail {

// Maps unconstrained reals to the coefficients c of a polynomial 1 - sum c_i L^i with
// all roots outside the unit circle: tanh gives partial autocorrelations, the
// Durbin-Levinson recursion turns them into coefficients.
std::vector<double> pacf_to_coefficients(std::span<const double> unconstrained);

// Inverse of pacf_to_coefficients. Returns false when c is not strictly inside the
// stationary region (some partial autocorrelation has |r| >= 1).
bool coefficients_to_pacf(std::span<const double> coefficients, std::vector<double>& unconstrained);

// True when 1 - sum c_i L^i has all roots strictly outside the unit circle.
bool is_stable(std::span<const double> coefficients);

// Expands (1 - sum a_i L^i)(1 - sum b_k L^{season k}) and returns the combined
// coefficients in the same "1 - sum" convention.
std::vector<double> expand_ar(std::span<const double> a, std::span<const double> b, int season);

// Expands (1 + sum a_i L^i)(1 + sum b_k L^{season k}) in the "1 + sum" convention.
std::vector<double> expand_ma(std::span<const double> a, std::span<const double> b, int season);

}  // namespace shockcast::detail
