#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "ncsimo/dof_region.hpp"
#include "ncsimo/penalty.hpp"

namespace ncsimo {

struct ExponentProfile {
  Rational eta_bar_1;
  Rational eta_1T;
  Rational eta_bar_2;
  Rational eta_2T;

  Rational eta_1() const { return eta_bar_1 < eta_1T ? eta_1T : eta_bar_1; }
  Rational eta_2() const { return eta_bar_2 < eta_2T ? eta_2T : eta_bar_2; }
};

void validate(const ExponentProfile& p);

enum class ExponentObjective { f_exponent, g_exponent };

const char* to_string(ExponentObjective objective);
ExponentObjective natural_objective(int T, int N);
bool objective_is_tight(int T, int N, ExponentObjective objective);

namespace exponent_detail {
template <class Num>
Num pos(Num x) { return x > Num(0) ? x : Num(0); }
template <class Num>
Num max2(Num a, Num b) { return a < b ? b : a; }
}  // namespace exponent_detail

// Per-user pre-log brackets (divided by T). `own_bar` and `own_last` are the
// user's exponents in its rotated frame, `other` is the other user's total
// exponent. Valid for any real exponents; "1 + x" terms contribute max(0, .).
template <class Num>
Num f_bracket(Num own_bar, Num own_last, Num other, int T, int N) {
  using namespace exponent_detail;
  const Num zero(0);
  const Num op = pos(other);
  const Num a = own_bar;
  const Num b = own_last;
  const Num value = Num(N + T - 2) * pos(a) + pos(a - op) +
                    Num(N) * pos(b - max2(max2(zero, op), a)) -
                    Num(N) * max2(max2(zero, a), b - op);
  return value / Num(T);
}

template <class Num>
GCase g_case(Num own_bar, Num own_last, Num other) {
  using namespace exponent_detail;
  const Num op = pos(other);
  const Num ratio = own_last - op;
  if (ratio > own_bar) return GCase::C;
  if (ratio < own_bar && own_last > max2(own_bar, op)) return GCase::B;
  return GCase::A;
}

template <class Num>
Num g_case_value(GCase c, Num own_bar, Num own_last, Num other, int T, int N) {
  using namespace exponent_detail;
  const Num op = pos(other);
  Num value(0);
  switch (c) {
    case GCase::A:
      value = Num(T - 2) * pos(own_bar) + pos(own_bar - op);
      break;
    case GCase::B:
      value = Num(T - 2) * pos(own_bar) + Num(N) * (max2(op, own_last) - max2(op, Num(1))) +
              pos(Num(1) - op);
      break;
    case GCase::C:
      value = Num(T - 1) * pos(own_last - op);
      break;
  }
  return value / Num(T);
}

template <class Num>
Num g_bracket(Num own_bar, Num own_last, Num other, int T, int N) {
  return g_case_value(g_case(own_bar, own_last, other), own_bar, own_last, other, T, N);
}

// Weighted objective at (eta_bar_1, eta_1T, eta_bar_2, eta_2T).
template <class Num>
Num exponent_objective(const std::array<Num, 4>& x, Num lambda1, Num lambda2, int T, int N,
                       ExponentObjective objective) {
  using exponent_detail::max2;
  const Num eta1 = max2(x[0], x[1]);
  const Num eta2 = max2(x[2], x[3]);
  if (objective == ExponentObjective::f_exponent) {
    return lambda1 * f_bracket(x[0], x[1], eta2, T, N) +
           lambda2 * f_bracket(x[2], x[3], eta1, T, N);
  }
  return lambda1 * g_bracket(x[0], x[1], eta2, T, N) +
         lambda2 * g_bracket(x[2], x[3], eta1, T, N);
}

Rational objective_value(const ExponentProfile& p, const WeightPair& w, int T, int N,
                         ExponentObjective objective);

struct SupResult {
  Rational value;
  ExponentProfile argmax;
  // False when the supremum is a limit along a case region and the tie rule
  // assigns a smaller value at the limit point itself.
  bool attained = true;
  bool regime_warning = false;
  std::size_t candidates = 0;
};

// Exact supremum over [0,1]^4 by enumerating the vertices of the hyperplane
// arrangement on which the objective is piecewise linear.
SupResult weighted_sum_dof_sup(const WeightPair& w, int T, int N, ExponentObjective objective);

}  // namespace ncsimo
