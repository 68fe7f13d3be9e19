#include "polynomial.hpp"

#include <cmath>

namespace shockcast::detail {

std::vector<double> pacf_to_coefficients(std::span<const double> unconstrained) {
  const std::size_t p = unconstrained.size();
  std::vector<double> phi(p);
  std::vector<double> work(p);
  for (std::size_t j = 0; j < p; ++j) phi[j] = std::tanh(unconstrained[j]);
  // Step-up: phi_{j,k} = phi_{j-1,k} - r_j * phi_{j-1,j-k}
  for (std::size_t j = 1; j < p; ++j) {
    const double r = phi[j];
    for (std::size_t k = 0; k < j; ++k) work[k] = phi[k] - r * phi[j - k - 1];
    for (std::size_t k = 0; k < j; ++k) phi[k] = work[k];
  }
  return phi;
}

bool coefficients_to_pacf(std::span<const double> coefficients, std::vector<double>& unconstrained) {
  const std::size_t p = coefficients.size();
  std::vector<double> phi(coefficients.begin(), coefficients.end());
  std::vector<double> work(p);
  unconstrained.assign(p, 0.0);
  // Step-down recursion, highest order first.
  for (std::size_t j = p; j-- > 0;) {
    const double r = phi[j];
    if (!(std::abs(r) < 1.0)) return false;
    const double denom = 1.0 - r * r;
    for (std::size_t k = 0; k < j; ++k) work[k] = (phi[k] + r * phi[j - k - 1]) / denom;
    for (std::size_t k = 0; k < j; ++k) phi[k] = work[k];
    unconstrained[j] = std::atanh(r);
  }
  return true;
}

bool is_stable(std::span<const double> coefficients) {
  std::vector<double> ignored;
  return coefficients_to_pacf(coefficients, ignored);
}

namespace {

std::vector<double> expand(std::span<const double> a, std::span<const double> b, int season,
                           double sign) {
  // Works on full polynomials with leading 1 and the given sign on the tail.
  std::vector<double> pa(a.size() + 1, 0.0);
  pa[0] = 1.0;
  for (std::size_t i = 0; i < a.size(); ++i) pa[i + 1] = sign * a[i];
  std::vector<double> pb(b.size() * static_cast<std::size_t>(season) + 1, 0.0);
  pb[0] = 1.0;
  for (std::size_t k = 0; k < b.size(); ++k) pb[(k + 1) * static_cast<std::size_t>(season)] = sign * b[k];

  std::vector<double> prod(pa.size() + pb.size() - 1, 0.0);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (pa[i] == 0.0) continue;
    for (std::size_t j = 0; j < pb.size(); ++j) prod[i + j] += pa[i] * pb[j];
  }
  std::vector<double> out(prod.size() - 1);
  for (std::size_t i = 1; i < prod.size(); ++i) out[i - 1] = sign * prod[i];
  return out;
}

}  // namespace

std::vector<double> expand_ar(std::span<const double> a, std::span<const double> b, int season) {
  return expand(a, b, season, -1.0);
}

std::vector<double> expand_ma(std::span<const double> a, std::span<const double> b, int season) {
  return expand(a, b, season, 1.0);
}

}  // namespace shockcast::detail
