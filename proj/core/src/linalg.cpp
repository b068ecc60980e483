#include "ncsimo/linalg.hpp"

#include <cmath>

#include "ncsimo/calibration.hpp"
#include "ncsimo/error.hpp"

namespace ncsimo {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::NumericalDomain: return "NumericalDomain";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::InvalidRegime: return "InvalidRegime";
    case ErrorKind::LowSnrRegime: return "LowSnrRegime";
    case ErrorKind::RegimeUnsupported: return "RegimeUnsupported";
  }
  return "Unknown";
}

double calibration::loglog_slack(double x) {
  const double l = std::max(std::log2(x), 1.0);
  return kLogLogSlope * std::log2(l) + kLogLogOffset;
}

CMatrix rotation_unitary_from(const CVector& x) {
  const Eigen::Index T = x.size();
  const double norm = x.norm();
  if (T == 0 || !(norm > 0.0)) {
    throw Error(ErrorKind::DegenerateInput, "rotation_unitary_from needs a nonzero vector");
  }
  const CVector t = x.conjugate() / norm;
  const cplx tT = t(T - 1);
  // Reflector mapping e_T to gamma * t; gamma opposes the phase of t_T so
  // w = e_T - gamma t never cancels.
  const cplx gamma = std::abs(tT) > 0.0 ? -std::abs(tT) / tT : cplx(-1.0, 0.0);
  CVector w = -gamma * t;
  w(T - 1) += 1.0;
  const double wn = w.squaredNorm();
  CMatrix U = CMatrix::Identity(T, T) - (2.0 / wn) * (w * w.adjoint());
  U.col(T - 1) *= std::conj(gamma);
  return U;
}

double log_det_hermitian_psd(const CMatrix& M) {
  if (M.rows() != M.cols() || M.rows() == 0) {
    throw Error(ErrorKind::NumericalDomain, "log_det_hermitian_psd needs a square matrix");
  }
  const double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  if ((M - M.adjoint()).cwiseAbs().maxCoeff() > calibration::kStructuralTol * scale) {
    throw Error(ErrorKind::NumericalDomain, "matrix is not Hermitian");
  }
  const CMatrix H = 0.5 * (M + M.adjoint());
  Eigen::LLT<CMatrix> llt(H);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorKind::NumericalDomain, "matrix is not positive definite");
  }
  const auto& L = llt.matrixLLT();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < L.rows(); ++i) {
    const double d = L(i, i).real();
    if (!(d > 0.0)) throw Error(ErrorKind::NumericalDomain, "singular matrix");
    acc += std::log2(d);
  }
  return 2.0 * acc;
}

double squared_norm(const cplx* z, int n) {
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += std::norm(z[i]);
  return acc;
}

double rank_one_shaped_norm_sq(const cplx* z, const cplx* y, int n, RankOneShape shape) {
  double ny = 0.0;
  double zz = 0.0;
  cplx ip(0.0, 0.0);
  for (int i = 0; i < n; ++i) {
    ny += std::norm(y[i]);
    zz += std::norm(z[i]);
    ip += std::conj(y[i]) * z[i];
  }
  const double denom = shape.c + shape.d * ny;
  return (zz - shape.d * std::norm(ip) / denom) / shape.c;
}

double rank_one_log_det_sq(double y_norm_sq, int n, RankOneShape shape) {
  return -((n - 1) * std::log(shape.c) + std::log(shape.c + shape.d * y_norm_sq));
}

CMatrix rank_one_shape_matrix(const CVector& y, RankOneShape shape) {
  const Eigen::Index n = y.size();
  const CMatrix M = shape.c * CMatrix::Identity(n, n) + shape.d * (y * y.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(M);
  const RVector inv_sqrt = es.eigenvalues().array().rsqrt();
  return es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace ncsimo
