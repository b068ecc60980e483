#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ncsimo {

// Pairwise (tree) summation; fixed order regardless of thread layout.
double pairwise_sum(std::span<const double> xs);

struct MeanEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

MeanEstimate mean_and_se(std::span<const double> xs);

// Least-squares slope of y against x.
double fitted_slope(std::span<const double> x, std::span<const double> y);

// Kolmogorov-Smirnov distance between the empirical law of xs and cdf.
template <class Cdf>
double ks_statistic(std::vector<double> xs, Cdf cdf);

}  // namespace ncsimo

#include <algorithm>
#include <cmath>

template <class Cdf>
double ncsimo::ks_statistic(std::vector<double> xs, Cdf cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::max(std::abs(f - static_cast<double>(i) / n),
                             std::abs(static_cast<double>(i + 1) / n - f)));
  }
  return d;
}
