#pragma once

#include <span>
#include <vector>

#include "ncsimo/linalg.hpp"
#include "ncsimo/random.hpp"
#include "ncsimo/report.hpp"

namespace ncsimo {

// R(N, A): ||A y||^2 ~ Gamma(alpha, beta) with uniform direction.
struct AuxDistParams {
  int N = 1;
  CMatrix A;
  double alpha = 1.0;
  double beta = 1.0;
};

void validate(const AuxDistParams& p);

// Natural log of the density at y.
double log_density(const CVector& y, const AuxDistParams& p);

// Same density written in s = ||Ay||^2 and ln|det A|^2. Natural log.
double log_density_radial(double s, double log_det_sq, int N, double alpha, double beta);

CVector sample(const AuxDistParams& p, Rng& rng);

enum class FitRule {
  // beta = mean, alpha = 1 / ln beta; mean <= 1 is rejected.
  inverse_log,
  // beta = mean, alpha = 1 / max(ln beta, kShapeLogFloor); any positive mean.
  capped_shape,
};

struct ShapeScale {
  double alpha = 1.0;
  double beta = 1.0;
};

ShapeScale fit_shape_scale(double mean, FitRule rule = FitRule::inverse_log);
AuxDistParams fit_params(std::span<const double> norms_sq, int N, const CMatrix& A,
                         FitRule rule = FitRule::inverse_log);

// Monte-Carlo E[-log2 r(Y)] over `samples`, the leading terms
// -log2|det A|^2 + N E[log2 ||AY||^2], and the remainder between them.
// `value` is the cross entropy in bits (per vector, not per channel use).
BoundReport cross_entropy_expansion(const std::vector<CVector>& samples, const AuxDistParams& p);

}  // namespace ncsimo
