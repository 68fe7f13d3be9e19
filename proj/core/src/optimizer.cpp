#include "shockcast/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace shockcast {

namespace {

constexpr double kReflect = 1.0;
constexpr double kExpand = 2.0;
constexpr double kContract = 0.5;
constexpr double kShrink = 0.5;

}  // namespace

NelderMeadResult nelder_mead(const Objective& objective, std::vector<double> start,
                             const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  NelderMeadResult result;
  auto eval = [&](const std::vector<double>& x) {
    ++result.evaluations;
    const double v = objective(x);
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };

  if (n == 0) {
    result.value = eval(start);
    result.x = std::move(start);
    result.converged = true;
    return result;
  }

  const int max_iter = options.max_iterations > 0 ? options.max_iterations : 200 * static_cast<int>(n);

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += options.initial_step;
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), second(n);

  auto point_along = [&](double coeff, const std::vector<double>& from, std::vector<double>& out) {
    // out = centroid + coeff * (centroid - from)
    for (std::size_t i = 0; i < n; ++i) out[i] = centroid[i] + coeff * (centroid[i] - from[i]);
  };

  int iter = 0;
  for (;;) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable sort keeps the earliest vertex on ties, so the start point wins
    // against equally good alternatives.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t next_worst = order[n - 1];

    const double fbest = values[best];
    const double spread = values[worst] - fbest;
    if (std::isfinite(fbest) &&
        std::abs(spread) <= options.rel_tol * (std::abs(fbest) + options.rel_tol)) {
      result.converged = true;
      break;
    }
    if (iter >= max_iter) break;
    ++iter;

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == worst) continue;
      for (std::size_t i = 0; i < n; ++i) centroid[i] += simplex[k][i];
    }
    for (double& c : centroid) c /= static_cast<double>(n);

    point_along(kReflect, simplex[worst], trial);
    const double f_reflect = eval(trial);
    if (f_reflect < fbest) {
      point_along(kReflect * kExpand, simplex[worst], second);
      const double f_expand = eval(second);
      if (f_expand < f_reflect) {
        simplex[worst] = second;
        values[worst] = f_expand;
      } else {
        simplex[worst] = trial;
        values[worst] = f_reflect;
      }
      continue;
    }
    if (f_reflect < values[next_worst]) {
      simplex[worst] = trial;
      values[worst] = f_reflect;
      continue;
    }
    // Contraction, outside if the reflection beat the worst vertex.
    const bool outside = f_reflect < values[worst];
    point_along(outside ? kContract : -kContract, simplex[worst], second);
    const double f_contract = eval(second);
    if (f_contract < (outside ? f_reflect : values[worst])) {
      simplex[worst] = second;
      values[worst] = f_contract;
      continue;
    }
    for (std::size_t k = 0; k <= n; ++k) {
      if (k == best) continue;
      for (std::size_t i = 0; i < n; ++i) {
        simplex[k][i] = simplex[best][i] + kShrink * (simplex[k][i] - simplex[best][i]);
      }
      values[k] = eval(simplex[k]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  const auto best = static_cast<std::size_t>(best_it - values.begin());
  result.x = simplex[best];
  result.value = values[best];
  result.iterations = iter;
  return result;
}

}  // namespace shockcast
