#include "ncsimo/achievability.hpp"

#include <cmath>

#include "ncsimo/error.hpp"
#include "ncsimo/stats.hpp"

namespace ncsimo {

SchemeSpec single_user_training_scheme(const ChannelConfig& cfg) {
  return {cfg.T, cfg.T >= 2 ? 1 : 0, cfg.P, cfg.P, {1}};
}

SchemeSpec mac_training_scheme(const ChannelConfig& cfg) { return {cfg.T, 2, cfg.P, cfg.P, {1, 2}}; }

void validate(const SchemeSpec& scheme, double P) {
  if (scheme.pilot_slots < 0 || scheme.pilot_slots > scheme.T) {
    throw Error(ErrorKind::InvalidParam, "pilot slots exceed the block length");
  }
  const double cap = P * (1.0 + 1e-12);
  if (scheme.pilot_power > cap || scheme.data_power > cap || scheme.pilot_power < 0.0 ||
      scheme.data_power < 0.0) {
    throw Error(ErrorKind::InvalidParam, "per-slot power outside [0, P]");
  }
  if (scheme.active_users.empty()) throw Error(ErrorKind::InvalidParam, "no active user");
}

namespace {

// LMMSE estimate of h from y = sqrt(P) h + z, unit-variance entries.
CVector lmmse(const CVector& h, double P, Rng& rng) {
  CVector est(h.size());
  const double gain = std::sqrt(P) / (1.0 + P);
  for (Eigen::Index i = 0; i < h.size(); ++i) est(i) = gain * (std::sqrt(P) * h(i) + sample_cn(rng));
  return est;
}

RateEstimate scaled(const std::vector<double>& per_block, double prelog) {
  const MeanEstimate e = mean_and_se(per_block);
  return {prelog * e.mean, prelog * e.std_error};
}

}  // namespace

RateEstimate single_user_training_rate(const ChannelConfig& cfg) {
  validate(cfg);
  const SchemeSpec scheme = single_user_training_scheme(cfg);
  validate(scheme, cfg.P);
  if (cfg.T < 2) return {0.0, 0.0};
  const double P = cfg.P;
  const double err_var = 1.0 / (1.0 + P);
  std::vector<double> r(cfg.trials);
  for_each_stream(cfg.trials, cfg.workers, cfg.seed, 0x7375747261ULL,
                  [&](std::size_t b, std::size_t e, Rng& rng) {
                    for (std::size_t m = b; m < e; ++m) {
                      const CVector h = sample_fading(cfg.fading, cfg.N, rng);
                      const CVector est = lmmse(h, P, rng);
                      const double sinr = P * est.squaredNorm() / (1.0 + P * err_var);
                      r[m] = std::log2(1.0 + sinr);
                    }
                  });
  return scaled(r, static_cast<double>(cfg.T - 1) / cfg.T);
}

RatePair mac_training_rates(const ChannelConfig& cfg) {
  validate(cfg);
  if (cfg.T < 3) {
    throw Error(ErrorKind::RegimeUnsupported, "MAC training needs T >= 3; use tdma_rates");
  }
  validate(mac_training_scheme(cfg), cfg.P);
  const double P = cfg.P;
  const double err_var = 1.0 / (1.0 + P);
  const double rho = P / (1.0 + 2.0 * P * err_var);
  std::vector<double> r1(cfg.trials), r2(cfg.trials);
  for_each_stream(cfg.trials, cfg.workers, cfg.seed, 0x6d61637472ULL,
                  [&](std::size_t b, std::size_t e, Rng& rng) {
                    for (std::size_t m = b; m < e; ++m) {
                      const CVector h1 = sample_fading(cfg.fading, cfg.N, rng);
                      const CVector h2 = sample_fading(cfg.fading, cfg.N, rng);
                      const CVector e1 = lmmse(h1, P, rng);
                      const CVector e2 = lmmse(h2, P, rng);
                      const double g1 = e1.squaredNorm();
                      const double g2 = e2.squaredNorm();
                      const double cross = std::norm(e1.dot(e2));
                      const double sum = std::log2((1.0 + rho * g1) * (1.0 + rho * g2) - rho * rho * cross);
                      const double solo1 = std::log2(1.0 + rho * g1);
                      const double solo2 = std::log2(1.0 + rho * g2);
                      r1[m] = 0.5 * (solo1 + (sum - solo2));
                      r2[m] = 0.5 * (solo2 + (sum - solo1));
                    }
                  });
  const double prelog = static_cast<double>(cfg.T - 2) / cfg.T;
  return {scaled(r1, prelog), scaled(r2, prelog)};
}

RatePair tdma_rates(const ChannelConfig& cfg, double tau) {
  if (!(tau >= 0.0 && tau <= 1.0)) throw Error(ErrorKind::InvalidParam, "tau must lie in [0, 1]");
  const RateEstimate r = single_user_training_rate(cfg);
  return {{tau * r.value, tau * r.std_error}, {(1.0 - tau) * r.value, (1.0 - tau) * r.std_error}};
}

std::vector<RationalPoint> dof_corner_points(int T, int N) {
  if (T < 1 || N < 1) throw Error(ErrorKind::InvalidParam, "T and N must be positive");
  if (T == 1) return {{Rational(0), Rational(0)}};
  const Rational single = Rational(1) - Rational(1, T);
  if (T == 2 || N == 1) return {{single, Rational(0)}, {Rational(0), single}};
  const Rational both = Rational(1) - Rational(2, T);
  return {{single, Rational(0)}, {Rational(0), single}, {both, both}};
}

}  // namespace ncsimo

namespace ncsimo {

DofRegion inner_region(int T, int N) { return region_from_points(dof_corner_points(T, N)); }

}  // namespace ncsimo
