#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsimo/linalg.hpp"
#include "ncsimo/random.hpp"
#include "ncsimo/stats.hpp"

namespace ncsimo {

enum class FadingKind { iid_complex_gaussian, iid_uniform_annulus };

const char* to_string(FadingKind kind);
FadingKind fading_kind_from_string(const std::string& name);

struct ChannelConfig {
  int T = 4;
  int N = 2;
  double P = 100.0;  // linear SNR
  FadingKind fading = FadingKind::iid_complex_gaussian;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  int workers = 1;
};

// Throws InvalidParam unless T>=1, N>=1, P>0, trials>=1, workers>=1.
void validate(const ChannelConfig& cfg);

double db_to_linear(double db);

// Annulus fading: |h| uniform on [inner, outer], uniform phase, E|h|^2 = 1.
inline constexpr double kAnnulusInner = 0.5;
double annulus_outer_radius();

CVector sample_fading(FadingKind kind, int N, Rng& rng);

// Y = h1 x1^T + h2 x2^T + Z with Z i.i.d. CN(0,1); N x T.
CMatrix apply_channel(const CVector& h1, const CVector& h2, const CVector& x1, const CVector& x2,
                      Rng& rng);
CMatrix apply_channel_noiseless(const CVector& h1, const CVector& h2, const CVector& x1,
                                const CVector& x2);

enum class InputKind {
  deterministic_point,
  pilot_data_product,
  exponent_profile_peak,
  isotropic_peak,
  exponential_power,
};
enum class ConstraintKind { average, peak };

const char* to_string(InputKind kind);

struct InputDistribution {
  InputKind kind = InputKind::isotropic_peak;
  ConstraintKind constraint = ConstraintKind::peak;
  double P = 1.0;

  // deterministic_point
  CVector point;
  // pilot_data_product: pilot_slot carries sqrt(slot_power), silent slots are 0,
  // the rest are CN(0, slot_power).
  int pilot_slot = -1;
  std::vector<int> silent_slots;
  double slot_power = 1.0;
  // isotropic_peak: ||x||^2 = norm_sq with uniform direction.
  // exponential_power: ||x||^2 ~ Exp(mean norm_sq) with uniform direction.
  double norm_sq = 1.0;
  // exponent_profile_peak, in the rotated frame x~ = U^T x:
  // max_{i<T} |x~_i|^2 = P^eta_bar, |x~_T|^2 = P^eta_last, other entries CN(0, floor_var).
  double eta_bar = 1.0;
  double eta_last = 1.0;
  double floor_var = 0.09;

  // Set by truncate_to_peak: draws are conditioned on ||x||^2 < peak_threshold.
  std::optional<double> peak_threshold;
};

InputDistribution deterministic_input(const CVector& x, double P, ConstraintKind constraint);
InputDistribution pilot_data_input(double P, int pilot_slot, std::vector<int> silent_slots);
InputDistribution isotropic_peak_input(double P, double norm_sq);
InputDistribution exponential_power_input(double P, int T);
InputDistribution exponent_profile_input(double P, double eta_bar, double eta_last);

// `rotation` is the frame for exponent_profile_peak (identity when null).
CVector sample_input(const InputDistribution& dist, int T, Rng& rng,
                     const CMatrix* rotation = nullptr);

struct TruncationReport {
  double threshold = 0.0;             // P^beta
  double truncation_probability = 0.0;
  double truncation_probability_se = 0.0;
  double markov_bound = 0.0;          // T P^{1-beta}
  double rate_gap_order_term = 0.0;   // P^{1-beta} log2(P^beta), unit constant
  MeanEstimate energy_before;
  MeanEstimate energy_after;
  double max_energy_after = 0.0;
};

struct Truncation {
  InputDistribution distribution;
  TruncationReport report;
};

// Conditional law given ||x||^2 < P^beta; statistics use cfg.trials draws.
Truncation truncate_to_peak(const InputDistribution& dist, const ChannelConfig& cfg, double beta);

// Monte-Carlo blocks. Block m stores x1, x2 (T entries each) and Y (N x T,
// column-major so each received column is contiguous).
struct SampleSet {
  int T = 0;
  int N = 0;
  std::size_t count = 0;
  std::vector<cplx> x1;
  std::vector<cplx> x2;
  std::vector<cplx> y;

  const cplx* x1_at(std::size_t m) const { return x1.data() + m * T; }
  const cplx* x2_at(std::size_t m) const { return x2.data() + m * T; }
  const cplx* y_at(std::size_t m) const { return y.data() + m * static_cast<std::size_t>(N * T); }
  const cplx* y_col(std::size_t m, int t) const { return y_at(m) + static_cast<std::size_t>(t) * N; }
};

// User 2 may be null (single-user link). When user 1 is an exponent profile its
// frame is rotation_unitary_from(x2) (identity if x2 = 0).
SampleSet generate_samples(const ChannelConfig& cfg, const InputDistribution& user1,
                           const InputDistribution* user2, std::uint64_t salt = 0);

// Same blocks with the users' roles exchanged (Y is symmetric in the users).
SampleSet swap_users(const SampleSet& s);

// Per-block ||x_k||^2 statistics for user k in {1, 2}.
MeanEstimate block_energy(const SampleSet& s, int user);

}  // namespace ncsimo
