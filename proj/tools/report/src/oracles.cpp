#include "ncsimo_report/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace ncsimo::oracle {

double ExponentGrid::bracket(double a, double b, double o, int T, int N, ExponentObjective objective) {
  const auto pos = [](double x) { return x > 0.0 ? x : 0.0; };
  if (objective == ExponentObjective::f_exponent) {
    return ((N + T - 2) * a + pos(a - o) + N * pos(b - std::max(a, o)) - N * std::max(a, b - o)) / T;
  }
  double g;
  if (b - o > a) {
    g = (T - 1) * pos(b - o);
  } else if (b - o < a && b > std::max(a, o)) {
    g = (T - 2) * a + N * (std::max(o, b) - 1.0) + (1.0 - o);
  } else {
    g = (T - 2) * a + pos(a - o);
  }
  return g / T;
}

ExponentGrid::ExponentGrid(int T, int N, ExponentObjective objective, int coarse)
    : T_(T), N_(N), objective_(objective), coarse_(coarse) {
  const int n = coarse + 1;
  best_.assign(static_cast<std::size_t>(n * n), -INFINITY);
  best_arg_.assign(static_cast<std::size_t>(n * n), {0, 0});
  const double h = 1.0 / coarse;
  for (int self = 0; self < n; ++self) {
    for (int other = 0; other < n; ++other) {
      double& best = best_[static_cast<std::size_t>(self * n + other)];
      auto& arg = best_arg_[static_cast<std::size_t>(self * n + other)];
      auto visit = [&](int p, int q) {
        const double v = bracket(p * h, q * h, other * h, T, N, objective);
        if (v > best) {
          best = v;
          arg = {p, q};
        }
      };
      for (int k = 0; k <= self; ++k) {
        visit(self, k);
        visit(k, self);
      }
    }
  }
}

double ExponentGrid::objective(const std::array<double, 4>& x, double l1, double l2) const {
  const double eta1 = std::max(x[0], x[1]);
  const double eta2 = std::max(x[2], x[3]);
  return l1 * bracket(x[0], x[1], eta2, T_, N_, objective_) +
         l2 * bracket(x[2], x[3], eta1, T_, N_, objective_);
}

GridResult ExponentGrid::search(double l1, double l2, int fine) const {
  const int n = coarse_ + 1;
  const double h = 1.0 / coarse_;
  GridResult r;
  r.coarse_value = -INFINITY;
  int b1 = 0;
  int b2 = 0;
  for (int e1 = 0; e1 < n; ++e1) {
    for (int e2 = 0; e2 < n; ++e2) {
      const double v = l1 * best_[static_cast<std::size_t>(e1 * n + e2)] +
                       l2 * best_[static_cast<std::size_t>(e2 * n + e1)];
      if (v > r.coarse_value) {
        r.coarse_value = v;
        b1 = e1;
        b2 = e2;
      }
    }
  }
  const auto& u1 = best_arg_[static_cast<std::size_t>(b1 * n + b2)];
  const auto& u2 = best_arg_[static_cast<std::size_t>(b2 * n + b1)];
  const std::array<double, 4> centre{u1[0] * h, u1[1] * h, u2[0] * h, u2[1] * h};
  r.value = r.coarse_value;
  r.argmax = centre;

  // Refine on the fine grid within one coarse step of the coarse argmax.
  const int span = fine / coarse_;
  std::array<std::vector<double>, 4> axes;
  for (std::size_t d = 0; d < 4; ++d) {
    const long c = std::lround(centre[d] * fine);
    for (long k = c - span; k <= c + span; ++k) {
      if (k >= 0 && k <= fine) axes[d].push_back(static_cast<double>(k) / fine);
    }
  }
  for (double a : axes[0])
    for (double b : axes[1])
      for (double c : axes[2])
        for (double e : axes[3]) {
          const std::array<double, 4> x{a, b, c, e};
          const double v = objective(x, l1, l2);
          if (v > r.value) {
            r.value = v;
            r.argmax = x;
          }
        }
  return r;
}

double grid_tolerance(int T, int N, int fine) { return 2.0 * (N + T) / T / fine; }

}  // namespace ncsimo::oracle
