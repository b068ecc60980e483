#include "ncsimo/mi_estimate.hpp"

#include <algorithm>
#include <cmath>

#include "ncsimo/error.hpp"
#include "ncsimo/stats.hpp"

namespace ncsimo {
namespace {

// Terms of ln p(Y | x1, x2) that depend on x1, given the per-row projections
// of Y on x2 (proj2) and ||x2||^2.
double likelihood_core(const cplx* y, const cplx* x1, const cplx* x2, const cplx* proj2,
                       double b2, int N, int T) {
  const double a = squared_norm(x1, T);
  cplx g12(0.0, 0.0);
  for (int t = 0; t < T; ++t) g12 += std::conj(x1[t]) * x2[t];
  // M = I + G = [[1 + a, g12], [conj(g12), 1 + b2]]
  const double m11 = 1.0 + a;
  const double m22 = 1.0 + b2;
  const double det = m11 * m22 - std::norm(g12);
  double quad = 0.0;
  for (int n = 0; n < N; ++n) {
    cplx c1(0.0, 0.0);
    for (int t = 0; t < T; ++t) c1 += std::conj(x1[t]) * y[t * N + n];
    const cplx c2 = proj2[n];
    // c^H M^{-1} c with M^{-1} = [[m22, -g12], [-conj(g12), m11]] / det
    const double v = m22 * std::norm(c1) + m11 * std::norm(c2) -
                     2.0 * std::real(std::conj(c1) * g12 * c2);
    quad += v / det;
  }
  return -N * std::log(det) + quad;
}

void project_rows(const cplx* y, const cplx* x, int N, int T, cplx* out) {
  for (int n = 0; n < N; ++n) {
    cplx c(0.0, 0.0);
    for (int t = 0; t < T; ++t) c += std::conj(x[t]) * y[t * N + n];
    out[n] = c;
  }
}

}  // namespace

double gaussian_log_likelihood(const cplx* y, const cplx* x1, const cplx* x2, int N, int T) {
  std::vector<cplx> proj2(static_cast<std::size_t>(N));
  project_rows(y, x2, N, T, proj2.data());
  const double b2 = squared_norm(x2, T);
  return -N * T * std::log(M_PI) - squared_norm(y, N * T) +
         likelihood_core(y, x1, x2, proj2.data(), b2, N, T);
}

MiEstimate contrastive_mi_lower_bound(const SampleSet& samples, std::size_t batch) {
  if (batch < 2) throw Error(ErrorKind::InvalidParam, "batch must hold at least two blocks");
  if (samples.count < 2) throw Error(ErrorKind::InvalidParam, "need at least two blocks");
  const int N = samples.N;
  const int T = samples.T;
  std::vector<double> terms;
  terms.reserve(samples.count);
  std::vector<double> scores;
  std::vector<cplx> proj2(static_cast<std::size_t>(N));
  for (std::size_t begin = 0; begin < samples.count; begin += batch) {
    const std::size_t end = std::min(samples.count, begin + batch);
    const std::size_t k = end - begin;
    if (k < 2) break;
    scores.resize(k);
    for (std::size_t m = begin; m < end; ++m) {
      const cplx* y = samples.y_at(m);
      const cplx* x2 = samples.x2_at(m);
      project_rows(y, x2, N, T, proj2.data());
      const double b2 = squared_norm(x2, T);
      double top = -INFINITY;
      for (std::size_t j = 0; j < k; ++j) {
        scores[j] = likelihood_core(y, samples.x1_at(begin + j), x2, proj2.data(), b2, N, T);
        top = std::max(top, scores[j]);
      }
      double acc = 0.0;
      for (double s : scores) acc += std::exp(s - top);
      const double lse = top + std::log(acc);
      terms.push_back(scores[m - begin] - lse + std::log(static_cast<double>(k)));
    }
  }
  const MeanEstimate e = mean_and_se(terms);
  MiEstimate out;
  out.batch = batch;
  out.bits_per_use = e.mean / std::log(2.0) / T;
  out.std_error = e.std_error / std::log(2.0) / T;
  out.cap_bits_per_use = std::log2(static_cast<double>(std::min(batch, samples.count))) / T;
  return out;
}

}  // namespace ncsimo
