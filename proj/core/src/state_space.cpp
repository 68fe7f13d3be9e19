#include "state_space.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "shockcast/errors.hpp"

namespace shockcast::detail {

namespace {

// Position of P(i, j), i <= j, in the packed upper triangle.
inline std::size_t packed(std::size_t i, std::size_t j, std::size_t dim) {
  if (i > j) std::swap(i, j);
  return i * dim - i * (i + 1) / 2 + j;
}

}  // namespace

ArmaStateSpace make_state_space(std::span<const double> phi, std::span<const double> theta) {
  const std::size_t dim = std::max(phi.size(), theta.size() + 1);
  ArmaStateSpace model;
  model.dim = static_cast<int>(dim);
  model.phi.assign(dim, 0.0);
  model.r_vec.assign(dim, 0.0);
  std::copy(phi.begin(), phi.end(), model.phi.begin());
  model.r_vec[0] = 1.0;
  std::copy(theta.begin(), theta.end(), model.r_vec.begin() + 1);

  // T has non-zeros only in column 0 (phi) and on the superdiagonal, so
  // (T P T')_{ij} = phi_i phi_j P_00 + phi_i P_{0,j+1} + phi_j P_{i+1,0} + P_{i+1,j+1}.
  // Solve the symmetric fixed point over the packed upper triangle.
  const std::size_t unknowns = dim * (dim + 1) / 2;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(unknowns),
                                                static_cast<Eigen::Index>(unknowns));
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(unknowns));
  const auto& f = model.phi;
  const auto& rv = model.r_vec;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const auto row = static_cast<Eigen::Index>(packed(i, j, dim));
      rhs(row) = rv[i] * rv[j];
      a(row, static_cast<Eigen::Index>(packed(0, 0, dim))) -= f[i] * f[j];
      if (j + 1 < dim) a(row, static_cast<Eigen::Index>(packed(0, j + 1, dim))) -= f[i];
      if (i + 1 < dim) a(row, static_cast<Eigen::Index>(packed(i + 1, 0, dim))) -= f[j];
      if (i + 1 < dim && j + 1 < dim) {
        a(row, static_cast<Eigen::Index>(packed(i + 1, j + 1, dim))) -= 1.0;
      }
    }
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
  const Eigen::VectorXd solution = lu.solve(rhs);
  if (!solution.allFinite()) throw InstabilityError("stationary covariance is not finite");

  model.p0.assign(dim * dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      model.p0[i * dim + j] = solution(static_cast<Eigen::Index>(packed(i, j, dim)));
    }
  }
  if (!(model.p0[0] > 0.0)) throw InstabilityError("stationary variance is not positive");
  return model;
}

FilterResult kalman_filter(const ArmaStateSpace& model, std::span<const double> y) {
  const std::size_t dim = static_cast<std::size_t>(model.dim);
  const auto& f = model.phi;
  const auto& rv = model.r_vec;

  std::vector<double> a(dim, 0.0);
  std::vector<double> p = model.p0;
  std::vector<double> au(dim);
  std::vector<double> pu(dim * dim);

  FilterResult out;
  out.innovations.reserve(y.size());
  out.variances.reserve(y.size());

  for (double obs : y) {
    const double v = obs - a[0];
    const double var = p[0];
    if (!(var > 0.0) || !std::isfinite(var) || !std::isfinite(v)) {
      throw InstabilityError("innovation variance is not positive and finite");
    }
    out.innovations.push_back(v);
    out.variances.push_back(var);
    out.sum_log_variance += std::log(var);
    out.sum_scaled_squares += v * v / var;

    // Measurement update.
    for (std::size_t i = 0; i < dim; ++i) au[i] = a[i] + p[i * dim] * v / var;
    for (std::size_t i = 0; i < dim; ++i) {
      const double pi0 = p[i * dim];
      for (std::size_t j = 0; j < dim; ++j) pu[i * dim + j] = p[i * dim + j] - pi0 * p[j] / var;
    }

    // Time update using the companion structure of T.
    for (std::size_t i = 0; i < dim; ++i) a[i] = f[i] * au[0] + (i + 1 < dim ? au[i + 1] : 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = i; j < dim; ++j) {
        double value = f[i] * f[j] * pu[0] + rv[i] * rv[j];
        if (j + 1 < dim) value += f[i] * pu[j + 1];
        if (i + 1 < dim) value += f[j] * pu[(i + 1) * dim];
        if (i + 1 < dim && j + 1 < dim) value += pu[(i + 1) * dim + j + 1];
        p[i * dim + j] = value;
        p[j * dim + i] = value;
      }
    }
  }
  out.next_state = std::move(a);
  return out;
}

std::vector<double> propagate_mean(const ArmaStateSpace& model, std::span<const double> next_state,
                                   int horizon) {
  const std::size_t dim = static_cast<std::size_t>(model.dim);
  std::vector<double> a(next_state.begin(), next_state.end());
  std::vector<double> b(dim);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(horizon, 0)));
  for (int h = 0; h < horizon; ++h) {
    out.push_back(a[0]);
    for (std::size_t i = 0; i < dim; ++i) b[i] = model.phi[i] * a[0] + (i + 1 < dim ? a[i + 1] : 0.0);
    a.swap(b);
  }
  return out;
}

}  // namespace shockcast::detail
