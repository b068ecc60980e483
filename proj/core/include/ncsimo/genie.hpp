#pragma once

#include <optional>
#include <string>

#include "ncsimo/linalg.hpp"

namespace ncsimo {

enum class MacRegime { T_ge_N_plus_1, T_le_N };

const char* to_string(MacRegime regime);
MacRegime mac_regime_from_string(const std::string& name);
// The regime whose genie and penalty are tight for (T, N).
MacRegime natural_regime(int T, int N);
// Throws RegimeUnsupported when (T, N) does not belong to `regime` or T < 2.
void check_regime(int T, int N, MacRegime regime);

// Slots are zero-based. `u` is present only in the T_le_N regime.
struct GenieIndex {
  int slot = 0;
  std::optional<int> u;
};

// argmax_i |x_i|^2, ties to the smallest index.
GenieIndex genie_index_single(const CVector& x);
GenieIndex genie_index_single(const cplx* x, int T);

GenieIndex genie_index_mac(const CVector& x1_rot, double x2_norm_sq, MacRegime regime);
GenieIndex genie_index_mac(const cplx* x1_rot, int T, double x2_norm_sq, MacRegime regime);

// Additive genie cost in bits: log2 T, log2(T-1), log2(2T).
double genie_cost_single(int T);
double genie_cost_mac(int T, MacRegime regime);

}  // namespace ncsimo
