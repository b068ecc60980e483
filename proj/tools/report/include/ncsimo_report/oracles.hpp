#pragma once

#include <array>
#include <vector>

#include "ncsimo/exponent.hpp"

namespace ncsimo::oracle {

// Brute-force grid maximisation of the exponent objective, written from the
// bracket definitions directly and sharing no code with the enumeration.
struct GridResult {
  double coarse_value = 0.0;
  double value = 0.0;  // after local refinement
  std::array<double, 4> argmax{};
};

// Holds per-user best values on the coarse grid so several weight pairs can be
// searched for one (T, N, objective).
class ExponentGrid {
 public:
  ExponentGrid(int T, int N, ExponentObjective objective, int coarse = 64);
  GridResult search(double lambda1, double lambda2, int fine = 512) const;

  static double bracket(double own_bar, double own_last, double other, int T, int N,
                        ExponentObjective objective);
  double objective(const std::array<double, 4>& x, double lambda1, double lambda2) const;

 private:
  int T_;
  int N_;
  ExponentObjective objective_;
  int coarse_;
  // best_[self * (coarse+1) + other]: max over {max(p,q) = self} of bracket(p, q, other)
  std::vector<double> best_;
  std::vector<std::array<int, 2>> best_arg_;
};

// Lipschitz envelope 2(N+T)/T used for the grid tolerance.
double grid_tolerance(int T, int N, int fine = 512);

}  // namespace ncsimo::oracle
