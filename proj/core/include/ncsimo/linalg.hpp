#pragma once

#include <complex>

#include <Eigen/Dense>

namespace ncsimo {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

// T x T unitary whose last column is conj(x)/||x||, built from one Householder
// reflector. Then conj(x) x^T = U diag(0,...,0,||x||^2) U^H and x^T U = (0,...,0,||x||).
CMatrix rotation_unitary_from(const CVector& x);

// log2 det(M) for Hermitian positive definite M (Cholesky).
double log_det_hermitian_psd(const CMatrix& M);

// For A = (c I + d y y^H)^{-1/2}: ||A z||^2 and ln|det A|^2, without forming A.
struct RankOneShape {
  double c = 1.0;
  double d = 1.0;
};
double rank_one_shaped_norm_sq(const cplx* z, const cplx* y, int n, RankOneShape shape);
double rank_one_log_det_sq(double y_norm_sq, int n, RankOneShape shape);

// Explicit (c I + d y y^H)^{-1/2}, for tests and general-A callers.
CMatrix rank_one_shape_matrix(const CVector& y, RankOneShape shape);

double squared_norm(const cplx* z, int n);

}  // namespace ncsimo
