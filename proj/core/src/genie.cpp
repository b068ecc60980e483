#include "ncsimo/genie.hpp"

#include <cmath>

#include "ncsimo/error.hpp"

namespace ncsimo {

const char* to_string(MacRegime regime) {
  return regime == MacRegime::T_ge_N_plus_1 ? "T_ge_N_plus_1" : "T_le_N";
}

MacRegime mac_regime_from_string(const std::string& name) {
  if (name == "T_ge_N_plus_1") return MacRegime::T_ge_N_plus_1;
  if (name == "T_le_N") return MacRegime::T_le_N;
  throw Error(ErrorKind::InvalidParam, "unknown regime '" + name + "'");
}

MacRegime natural_regime(int T, int N) {
  return T >= N + 1 ? MacRegime::T_ge_N_plus_1 : MacRegime::T_le_N;
}

void check_regime(int T, int N, MacRegime regime) {
  if (T < 2) throw Error(ErrorKind::RegimeUnsupported, "MAC duality bounds need T >= 2");
  if (regime != natural_regime(T, N)) {
    throw Error(ErrorKind::RegimeUnsupported,
                std::string("regime ") + to_string(regime) + " does not match T=" +
                    std::to_string(T) + ", N=" + std::to_string(N));
  }
}

GenieIndex genie_index_single(const cplx* x, int T) {
  GenieIndex g;
  double best = -1.0;
  for (int i = 0; i < T; ++i) {
    const double a = std::norm(x[i]);
    if (a > best) {
      best = a;
      g.slot = i;
    }
  }
  return g;
}

GenieIndex genie_index_single(const CVector& x) {
  return genie_index_single(x.data(), static_cast<int>(x.size()));
}

GenieIndex genie_index_mac(const cplx* x1_rot, int T, double x2_norm_sq, MacRegime regime) {
  if (T < 1) throw Error(ErrorKind::InvalidParam, "empty input");
  if (regime == MacRegime::T_ge_N_plus_1) {
    return genie_index_single(x1_rot, T > 1 ? T - 1 : 1);
  }
  const double last_var = 1.0 + x2_norm_sq;
  GenieIndex g;
  double best = -1.0;
  double head_max = 0.0;
  for (int i = 0; i < T; ++i) {
    const double a = std::norm(x1_rot[i]);
    if (i < T - 1) head_max = std::max(head_max, a);
    const double ratio = i == T - 1 ? a / last_var : a;
    if (ratio > best) {
      best = ratio;
      g.slot = i;
    }
  }
  const double last = std::norm(x1_rot[T - 1]);
  g.u = last >= std::max(head_max, last_var) ? 1 : 0;
  return g;
}

GenieIndex genie_index_mac(const CVector& x1_rot, double x2_norm_sq, MacRegime regime) {
  return genie_index_mac(x1_rot.data(), static_cast<int>(x1_rot.size()), x2_norm_sq, regime);
}

double genie_cost_single(int T) { return std::log2(static_cast<double>(T)); }

double genie_cost_mac(int T, MacRegime regime) {
  return regime == MacRegime::T_ge_N_plus_1 ? std::log2(static_cast<double>(T - 1))
                                            : std::log2(2.0 * T);
}

}  // namespace ncsimo
