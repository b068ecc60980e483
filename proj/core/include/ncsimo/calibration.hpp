#pragma once

// Constants shared across modules. Keep every tunable number here.

namespace ncsimo::calibration {

// Remainder envelope c0 * log2(log2 x) + c1 for the auxiliary-family fit.
inline constexpr double kLogLogSlope = 2.0;
inline constexpr double kLogLogOffset = 5.0;

// Converse fits cap the shape parameter at 1 / kShapeLogFloor.
inline constexpr double kShapeLogFloor = 1.0;

inline constexpr double kStructuralTol = 1e-10;
inline constexpr double kAlgebraicTol = 1e-9;

// Density evaluation refuses ||Ay||^2 below this.
inline constexpr double kSingularRadiusSq = 1e-300;

// Number of standard errors used in one-sided Monte-Carlo checks.
inline constexpr double kSigmaSlack = 3.0;

// Neighbour count for k-NN entropy estimates.
inline constexpr int kKnnNeighbours = 4;

// 2 log2 log2 x + 5, with log2 x floored at 1 so the envelope stays finite below x = 2.
double loglog_slack(double x);

}  // namespace ncsimo::calibration
