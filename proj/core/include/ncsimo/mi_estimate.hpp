#pragma once

#include <cstddef>

#include "ncsimo/channel.hpp"

namespace ncsimo {

struct MiEstimate {
  double bits_per_use = 0.0;
  double std_error = 0.0;
  double cap_bits_per_use = 0.0;  // log2(batch) / T
  std::size_t batch = 0;
};

// Contrastive (InfoNCE) lower bound on I(X1; Y | X2) / T for Gaussian fading,
// scored with the exact conditional likelihood p(Y | x1, x2). Blocks are
// grouped into batches of `batch`; in-batch user-1 inputs act as negatives.
MiEstimate contrastive_mi_lower_bound(const SampleSet& samples, std::size_t batch);

// ln p(Y | x1, x2) for Gaussian fading.
double gaussian_log_likelihood(const cplx* y, const cplx* x1, const cplx* x2, int N, int T);

}  // namespace ncsimo
