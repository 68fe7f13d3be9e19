#pragma once

#include <functional>
#include <span>
#include <vector>

namespace shockcast {

struct NelderMeadOptions {
  // Stop when |f_worst - f_best| <= rel_tol * (|f_best| + rel_tol).
  double rel_tol = 1e-8;
  // 0 means 200 * dimension.
  int max_iterations = 0;
  // Initial simplex edge along each axis.
  double initial_step = 0.1;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free downhill simplex minimization. Non-finite objective values are
// treated as +infinity, which lets callers reject infeasible points.
NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> start,
                             const NelderMeadOptions& options = {});

}  // namespace shockcast
