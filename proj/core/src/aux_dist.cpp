#include "ncsimo/aux_dist.hpp"

#include <cmath>
#include <limits>

#include <boost/math/special_functions/gamma.hpp>

#include "ncsimo/calibration.hpp"
#include "ncsimo/error.hpp"
#include "ncsimo/stats.hpp"

namespace ncsimo {

namespace {

double log_abs_det_sq(const CMatrix& A) {
  Eigen::PartialPivLU<CMatrix> lu(A);
  double acc = 0.0;
  const auto& m = lu.matrixLU();
  for (Eigen::Index i = 0; i < m.rows(); ++i) acc += std::log(std::norm(m(i, i)));
  return acc;
}

}  // namespace

void validate(const AuxDistParams& p) {
  if (p.N < 1 || p.A.rows() != p.N || p.A.cols() != p.N) {
    throw Error(ErrorKind::InvalidParam, "A must be N x N");
  }
  if (!(p.alpha > 0.0) || !(p.beta > 0.0) || !std::isfinite(p.alpha) || !std::isfinite(p.beta)) {
    throw Error(ErrorKind::InvalidParam, "alpha and beta must be positive");
  }
  if (!std::isfinite(log_abs_det_sq(p.A))) throw Error(ErrorKind::InvalidParam, "A is singular");
}

double log_density_radial(double s, double log_det_sq, int N, double alpha, double beta) {
  const double norm = boost::math::lgamma(static_cast<double>(N)) + log_det_sq -
                      N * std::log(M_PI) - alpha * std::log(beta) - boost::math::lgamma(alpha);
  if (s < calibration::kSingularRadiusSq) {
    if (alpha < N) throw Error(ErrorKind::SingularPoint, "density is unbounded at the origin");
    if (alpha == N) return norm;
    return -std::numeric_limits<double>::infinity();
  }
  return norm + (alpha - N) * std::log(s) - s / beta;
}

double log_density(const CVector& y, const AuxDistParams& p) {
  validate(p);
  if (y.size() != p.N) throw Error(ErrorKind::InvalidParam, "y has wrong length");
  const double s = (p.A * y).squaredNorm();
  return log_density_radial(s, log_abs_det_sq(p.A), p.N, p.alpha, p.beta);
}

CVector sample(const AuxDistParams& p, Rng& rng) {
  validate(p);
  const double s = sample_gamma(p.alpha, p.beta, rng);
  const CVector w = std::sqrt(s) * sample_uniform_complex_sphere(p.N, rng);
  return p.A.partialPivLu().solve(w);
}

ShapeScale fit_shape_scale(double mean, FitRule rule) {
  if (!(mean > 0.0) || !std::isfinite(mean)) {
    throw Error(ErrorKind::InvalidParam, "sample mean must be positive and finite");
  }
  if (rule == FitRule::inverse_log) {
    if (mean <= 1.0) throw Error(ErrorKind::InvalidRegime, "mean <= 1 gives a nonpositive shape");
    return {1.0 / std::log(mean), mean};
  }
  return {1.0 / std::max(std::log(mean), calibration::kShapeLogFloor), mean};
}

AuxDistParams fit_params(std::span<const double> norms_sq, int N, const CMatrix& A, FitRule rule) {
  if (norms_sq.empty()) throw Error(ErrorKind::InvalidParam, "no samples to fit");
  const double mean = pairwise_sum(norms_sq) / static_cast<double>(norms_sq.size());
  const ShapeScale ss = fit_shape_scale(mean, rule);
  AuxDistParams p{N, A, ss.alpha, ss.beta};
  validate(p);
  return p;
}

BoundReport cross_entropy_expansion(const std::vector<CVector>& samples, const AuxDistParams& p) {
  validate(p);
  if (samples.empty()) throw Error(ErrorKind::InvalidParam, "no samples");
  const double ld = log_abs_det_sq(p.A);
  const double ln2 = std::log(2.0);
  std::vector<double> ce(samples.size());
  std::vector<double> lead(samples.size());
  std::vector<double> rem(samples.size());
  for (std::size_t m = 0; m < samples.size(); ++m) {
    const double s = (p.A * samples[m]).squaredNorm();
    ce[m] = -log_density_radial(s, ld, p.N, p.alpha, p.beta) / ln2;
    lead[m] = -ld / ln2 + p.N * std::log2(s);
    rem[m] = ce[m] - lead[m];
  }
  const MeanEstimate c = mean_and_se(ce);
  const MeanEstimate l = mean_and_se(lead);
  const MeanEstimate r = mean_and_se(rem);
  BoundReport out;
  out.value = c.mean;
  out.std_error = c.std_error;
  out.components = {{"cross_entropy", c.mean, c.std_error}, {"leading_terms", l.mean, l.std_error}};
  out.remainder_terms = {{"loglog_remainder", r.mean, r.std_error},
                         {"loglog_envelope", calibration::loglog_slack(p.beta), 0.0}};
  out.fits = {{"aux", samples.size(), p.alpha, p.beta}};
  return out;
}

}  // namespace ncsimo
