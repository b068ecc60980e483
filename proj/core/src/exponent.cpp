#include "ncsimo/exponent.hpp"

#include <algorithm>
#include <set>

#include "ncsimo/error.hpp"

namespace ncsimo {

const char* to_string(ExponentObjective objective) {
  return objective == ExponentObjective::f_exponent ? "f_exponent" : "g_exponent";
}

ExponentObjective natural_objective(int T, int N) {
  return T >= N + 1 ? ExponentObjective::f_exponent : ExponentObjective::g_exponent;
}

bool objective_is_tight(int T, int N, ExponentObjective objective) {
  if (objective == ExponentObjective::f_exponent) return T >= N + 1 && N + 1 >= 3;
  return T >= 3 && T <= N;
}

void validate(const ExponentProfile& p) {
  for (const Rational& x : {p.eta_bar_1, p.eta_1T, p.eta_bar_2, p.eta_2T}) {
    if (x < Rational(0) || x > Rational(1)) {
      throw Error(ErrorKind::InvalidParam, "exponents must lie in [0, 1]");
    }
  }
}

Rational objective_value(const ExponentProfile& p, const WeightPair& w, int T, int N,
                         ExponentObjective objective) {
  validate(p);
  validate(w);
  const std::array<Rational, 4> x{p.eta_bar_1, p.eta_1T, p.eta_bar_2, p.eta_2T};
  return exponent_objective(x, w.lambda1, w.lambda2, T, N, objective);
}

namespace {

using Point = std::array<Rational, 4>;
using Form = std::array<int, 4>;  // integer linear form on (eta_bar_1, eta_1T, eta_bar_2, eta_2T)

enum Var { kA = 0, kB = 1, kC = 2, kE = 3 };

Form unit(int i, int sign = 1) {
  Form f{0, 0, 0, 0};
  f[static_cast<std::size_t>(i)] = sign;
  return f;
}

Form sum(Form x, const Form& y, int sign = 1) {
  for (std::size_t i = 0; i < 4; ++i) x[i] += sign * y[i];
  return x;
}

Rational apply(const Form& f, const Point& p) {
  Rational acc(0);
  for (std::size_t i = 0; i < 4; ++i) {
    if (f[i] != 0) acc += Rational(f[i]) * p[i];
  }
  return acc;
}

struct Plane {
  Form form;
  int rhs;
};

// Every kink and case boundary of both objectives lies on one of these.
std::vector<Plane> arrangement() {
  std::vector<Plane> planes;
  for (int i = 0; i < 4; ++i) {
    planes.push_back({unit(i), 0});
    planes.push_back({unit(i), 1});
  }
  auto diff = [](int i, int j) { return sum(unit(i), unit(j), -1); };
  for (auto [i, j] : std::initializer_list<std::pair<int, int>>{{kA, kB}, {kC, kE}, {kA, kC}, {kA, kE}, {kB, kC}, {kB, kE}}) {
    planes.push_back({diff(i, j), 0});
  }
  // own_last - other - own_bar = 0
  for (int o : {kC, kE}) planes.push_back({sum(diff(kB, o), unit(kA), -1), 0});
  for (int o : {kA, kB}) planes.push_back({sum(diff(kE, o), unit(kC), -1), 0});
  return planes;
}

bool solve4(std::array<std::array<Rational, 5>, 4> m, Point& out) {
  for (std::size_t col = 0; col < 4; ++col) {
    std::size_t piv = col;
    while (piv < 4 && m[piv][col] == Rational(0)) ++piv;
    if (piv == 4) return false;
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < 4; ++r) {
      if (r == col || m[r][col] == Rational(0)) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 5; ++c) m[r][c] -= f * m[col][c];
    }
  }
  for (std::size_t r = 0; r < 4; ++r) out[r] = m[r][4] / m[r][r];
  return true;
}

std::vector<Point> arrangement_vertices() {
  const std::vector<Plane> planes = arrangement();
  std::set<Point> found;
  const std::size_t n = planes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          std::array<std::array<Rational, 5>, 4> m;
          const std::size_t idx[4] = {i, j, k, l};
          for (std::size_t r = 0; r < 4; ++r) {
            const Plane& p = planes[idx[r]];
            for (std::size_t c = 0; c < 4; ++c) m[r][c] = Rational(p.form[c]);
            m[r][4] = Rational(p.rhs);
          }
          Point x;
          if (!solve4(m, x)) continue;
          bool inside = true;
          for (const Rational& v : x) inside = inside && v >= Rational(0) && v <= Rational(1);
          if (inside) found.insert(x);
        }
  return {found.begin(), found.end()};
}

enum class Sense { nonneg, positive, zero };

struct Constraint {
  Form form;
  Sense sense;
};

struct Piece {
  GCase case1;
  GCase case2;
  std::vector<std::size_t> vertices;
};

// Case regions of one user's g bracket, with the other user's exponent fixed
// to the linear form `other`.
std::vector<std::pair<GCase, std::vector<Constraint>>> case_pieces(int own_bar, int own_last,
                                                                   const Form& other) {
  const Form ratio = sum(sum(unit(own_last), other, -1), unit(own_bar), -1);
  const Form neg_ratio = sum(Form{0, 0, 0, 0}, ratio, -1);
  const Form last_minus_bar = sum(unit(own_last), unit(own_bar), -1);
  const Form last_minus_other = sum(unit(own_last), other, -1);
  const Form bar_minus_last = sum(Form{0, 0, 0, 0}, last_minus_bar, -1);
  const Form other_minus_last = sum(Form{0, 0, 0, 0}, last_minus_other, -1);
  return {
      {GCase::C, {{ratio, Sense::positive}}},
      {GCase::B,
       {{neg_ratio, Sense::positive}, {last_minus_bar, Sense::positive}, {last_minus_other, Sense::positive}}},
      {GCase::A, {{ratio, Sense::zero}}},
      {GCase::A, {{neg_ratio, Sense::positive}, {bar_minus_last, Sense::nonneg}}},
      {GCase::A, {{neg_ratio, Sense::positive}, {other_minus_last, Sense::nonneg}}},
  };
}

bool closure_holds(const Constraint& c, const Point& p) {
  const Rational v = apply(c.form, p);
  return c.sense == Sense::zero ? v == Rational(0) : v >= Rational(0);
}

bool strict_holds(const Constraint& c, const Point& p) {
  const Rational v = apply(c.form, p);
  switch (c.sense) {
    case Sense::nonneg: return v >= Rational(0);
    case Sense::positive: return v > Rational(0);
    case Sense::zero: return v == Rational(0);
  }
  return false;
}

struct Arrangement {
  std::vector<Point> vertices;
  std::vector<Piece> g_pieces;
};

const Arrangement& cached_arrangement() {
  static const Arrangement arr = [] {
    Arrangement a;
    a.vertices = arrangement_vertices();
    const Form c_minus_e = sum(unit(kC), unit(kE), -1);
    const Form a_minus_b = sum(unit(kA), unit(kB), -1);
    for (int eta2_is_c : {1, 0}) {
      for (int eta1_is_a : {1, 0}) {
        const Form eta2 = unit(eta2_is_c ? kC : kE);
        const Form eta1 = unit(eta1_is_a ? kA : kB);
        const Constraint r2{eta2_is_c ? c_minus_e : sum(Form{0, 0, 0, 0}, c_minus_e, -1), Sense::nonneg};
        const Constraint r1{eta1_is_a ? a_minus_b : sum(Form{0, 0, 0, 0}, a_minus_b, -1), Sense::nonneg};
        for (const auto& [case1, cons1] : case_pieces(kA, kB, eta2)) {
          for (const auto& [case2, cons2] : case_pieces(kC, kE, eta1)) {
            std::vector<Constraint> all{r1, r2};
            all.insert(all.end(), cons1.begin(), cons1.end());
            all.insert(all.end(), cons2.begin(), cons2.end());
            Piece piece{case1, case2, {}};
            Point centroid{Rational(0), Rational(0), Rational(0), Rational(0)};
            for (std::size_t v = 0; v < a.vertices.size(); ++v) {
              const Point& p = a.vertices[v];
              if (std::all_of(all.begin(), all.end(), [&](const Constraint& c) { return closure_holds(c, p); })) {
                piece.vertices.push_back(v);
                for (std::size_t i = 0; i < 4; ++i) centroid[i] += p[i];
              }
            }
            if (piece.vertices.empty()) continue;
            for (auto& x : centroid) x /= Rational(static_cast<std::int64_t>(piece.vertices.size()));
            // The centroid is relatively interior to the closure; the open piece
            // is nonempty exactly when the centroid meets the strict constraints.
            if (!std::all_of(all.begin(), all.end(), [&](const Constraint& c) { return strict_holds(c, centroid); })) {
              continue;
            }
            a.g_pieces.push_back(std::move(piece));
          }
        }
      }
    }
    return a;
  }();
  return arr;
}

ExponentProfile to_profile(const Point& p) { return {p[0], p[1], p[2], p[3]}; }

}  // namespace

SupResult weighted_sum_dof_sup(const WeightPair& w, int T, int N, ExponentObjective objective) {
  validate(w);
  if (T < 1 || N < 1) throw Error(ErrorKind::InvalidParam, "T and N must be positive");
  const Arrangement& arr = cached_arrangement();
  SupResult out;
  out.regime_warning = !objective_is_tight(T, N, objective);
  bool have = false;
  auto consider = [&](const Rational& value, const Point& p) {
    if (!have || value > out.value) {
      out.value = value;
      out.argmax = to_profile(p);
      have = true;
    }
  };
  if (objective == ExponentObjective::f_exponent) {
    for (const Point& p : arr.vertices) {
      consider(exponent_objective(p, w.lambda1, w.lambda2, T, N, objective), p);
      ++out.candidates;
    }
    return out;
  }
  for (const Piece& piece : arr.g_pieces) {
    for (std::size_t v : piece.vertices) {
      const Point& p = arr.vertices[v];
      const Rational eta1 = std::max(p[0], p[1]);
      const Rational eta2 = std::max(p[2], p[3]);
      const Rational value = w.lambda1 * g_case_value(piece.case1, p[0], p[1], eta2, T, N) +
                             w.lambda2 * g_case_value(piece.case2, p[2], p[3], eta1, T, N);
      consider(value, p);
      ++out.candidates;
    }
  }
  const Point best{out.argmax.eta_bar_1, out.argmax.eta_1T, out.argmax.eta_bar_2, out.argmax.eta_2T};
  out.attained = exponent_objective(best, w.lambda1, w.lambda2, T, N, objective) == out.value;
  return out;
}

}  // namespace ncsimo
