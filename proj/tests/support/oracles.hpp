#pragma once

// Reference computations used as independent oracles by the tests. Nothing here
// shares code with the library under test.

#include <Eigen/Dense>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

namespace oracle {

// psi-weights of (1 + sum theta L^j) / (1 - sum phi L^i), truncated at m terms.
inline std::vector<double> psi_weights(const std::vector<double>& phi, const std::vector<double>& theta,
                                       std::size_t m) {
  std::vector<double> psi(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double v = j == 0 ? 1.0 : (j <= theta.size() ? theta[j - 1] : 0.0);
    for (std::size_t i = 1; i <= phi.size() && i <= j; ++i) v += phi[i - 1] * psi[j - i];
    psi[j] = v;
  }
  return psi;
}

// gamma(0..max_lag) of a stationary ARMA process.
inline std::vector<double> arma_autocovariance(const std::vector<double>& phi, const std::vector<double>& theta,
                                               double sigma2, std::size_t max_lag, std::size_t terms = 20000) {
  const auto psi = psi_weights(phi, theta, terms + max_lag);
  std::vector<double> gamma(max_lag + 1, 0.0);
  for (std::size_t h = 0; h <= max_lag; ++h) {
    long double acc = 0.0L;
    for (std::size_t j = 0; j < terms; ++j) acc += static_cast<long double>(psi[j]) * psi[j + h];
    gamma[h] = sigma2 * static_cast<double>(acc);
  }
  return gamma;
}

// Log-density of y ~ N(mean, cov) via a Cholesky factorization.
inline double mvn_logpdf(const Eigen::MatrixXd& cov, const Eigen::VectorXd& y) {
  const Eigen::LLT<Eigen::MatrixXd> llt(cov);
  const Eigen::MatrixXd l = llt.matrixL();
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < l.rows(); ++i) log_det += 2.0 * std::log(l(i, i));
  const Eigen::VectorXd z = llt.matrixL().solve(y);
  const double n = static_cast<double>(y.size());
  return -0.5 * (n * std::log(2.0 * std::numbers::pi) + log_det + z.squaredNorm());
}

inline double arma_mvn_loglik(const std::vector<double>& phi, const std::vector<double>& theta, double sigma2,
                              const std::vector<double>& y, double mean = 0.0) {
  const auto n = y.size();
  const auto gamma = arma_autocovariance(phi, theta, sigma2, n);
  Eigen::MatrixXd cov(n, n);
  Eigen::VectorXd v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v(static_cast<Eigen::Index>(i)) = y[i] - mean;
    for (std::size_t j = 0; j < n; ++j) {
      cov(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = gamma[i > j ? i - j : j - i];
    }
  }
  return mvn_logpdf(cov, v);
}

// Simulates x_t = sum phi_i x_{t-i} + e_t + sum theta_j e_{t-j} after a burn-in.
inline std::vector<double> simulate_arma(const std::vector<double>& phi, const std::vector<double>& theta,
                                         double sigma, std::size_t n, std::mt19937_64& rng,
                                         std::size_t burn = 200) {
  std::normal_distribution<double> normal(0.0, sigma);
  const std::size_t total = n + burn;
  std::vector<double> x(total, 0.0);
  std::vector<double> e(total, 0.0);
  for (std::size_t t = 0; t < total; ++t) {
    e[t] = normal(rng);
    double v = e[t];
    for (std::size_t i = 1; i <= phi.size() && i <= t; ++i) v += phi[i - 1] * x[t - i];
    for (std::size_t j = 1; j <= theta.size() && j <= t; ++j) v += theta[j - 1] * e[t - j];
    x[t] = v;
  }
  return {x.begin() + static_cast<std::ptrdiff_t>(burn), x.end()};
}

// Partial sums starting at `start`.
inline std::vector<double> cumulate(const std::vector<double>& increments, double start) {
  std::vector<double> out;
  out.reserve(increments.size() + 1);
  out.push_back(start);
  for (double d : increments) out.push_back(out.back() + d);
  return out;
}

inline std::vector<double> white_noise(std::size_t n, double sigma, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, sigma);
  std::vector<double> out(n);
  for (auto& v : out) v = normal(rng);
  return out;
}

// Variance with divisor n - ddof.
inline double variance(const std::vector<double>& v, int ddof) {
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return ss / static_cast<double>(static_cast<int>(v.size()) - ddof);
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("shockcast-test-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace oracle
