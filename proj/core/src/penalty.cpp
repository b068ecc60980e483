#include "ncsimo/penalty.hpp"

#include <algorithm>
#include <cmath>

#include "ncsimo/error.hpp"

namespace ncsimo {
namespace {

struct Powers {
  double head_max = 0.0;  // max_{i<T} |x~_i|^2
  double head_sum = 0.0;  // sum_{i<T} |x~_i|^2
  double last = 0.0;      // |x~_T|^2
  double other = 0.0;     // ||x2||^2
};

Powers powers(const CVector& x1_rot, const CVector& x2) {
  const Eigen::Index T = x1_rot.size();
  if (T < 1) throw Error(ErrorKind::InvalidParam, "empty input");
  Powers p;
  for (Eigen::Index i = 0; i + 1 < T; ++i) {
    const double a = std::norm(x1_rot(i));
    p.head_max = std::max(p.head_max, a);
    p.head_sum += a;
  }
  p.last = std::norm(x1_rot(T - 1));
  p.other = x2.squaredNorm();
  return p;
}

}  // namespace

const char* to_string(GCase c) {
  switch (c) {
    case GCase::A: return "A";
    case GCase::B: return "B";
    case GCase::C: return "C";
  }
  return "?";
}

double eval_f(const CVector& x1_rot, const CVector& x2, int N) {
  const Powers p = powers(x1_rot, x2);
  const double T = static_cast<double>(x1_rot.size());
  return (N + T - 2.0) * std::log2(1.0 + p.head_max) +
         std::log2(1.0 + p.head_max / (1.0 + p.other)) +
         N * std::log2(1.0 + p.last / (1.0 + p.other + p.head_max)) -
         N * std::log2(1.0 + p.head_sum + p.last / (1.0 + p.other));
}

GCase classify_g(const CVector& x1_rot, const CVector& x2) {
  const Powers p = powers(x1_rot, x2);
  const double ratio = p.last / (1.0 + p.other);
  if (ratio > p.head_max) return GCase::C;
  if (ratio < p.head_max && p.last > std::max(p.head_max, 1.0 + p.other)) return GCase::B;
  return GCase::A;
}

double eval_g(const CVector& x1_rot, const CVector& x2, double P, int N) {
  if (!(P > 0.0)) throw Error(ErrorKind::InvalidParam, "P must be positive");
  const Powers p = powers(x1_rot, x2);
  const double T = static_cast<double>(x1_rot.size());
  switch (classify_g(x1_rot, x2)) {
    case GCase::A:
      return (T - 2.0) * std::log2(1.0 + p.head_max) + std::log2(1.0 + p.head_max / (1.0 + p.other));
    case GCase::B:
      return (T - 2.0) * std::log2(1.0 + p.head_max) +
             N * std::log2((1.0 + p.other + p.last) / (1.0 + p.other + P)) +
             std::log2(1.0 + P / (1.0 + p.other));
    case GCase::C:
      return (T - 1.0) * std::log2(1.0 + p.last / (1.0 + p.other));
  }
  return 0.0;
}

}  // namespace ncsimo
