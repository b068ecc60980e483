#include "ncsimo/channel.hpp"

#include <algorithm>
#include <cmath>

#include "ncsimo/error.hpp"

namespace ncsimo {

const char* to_string(FadingKind kind) {
  switch (kind) {
    case FadingKind::iid_complex_gaussian: return "iid_complex_gaussian";
    case FadingKind::iid_uniform_annulus: return "iid_uniform_annulus";
  }
  return "unknown";
}

FadingKind fading_kind_from_string(const std::string& name) {
  if (name == "iid_complex_gaussian" || name == "gaussian") return FadingKind::iid_complex_gaussian;
  if (name == "iid_uniform_annulus" || name == "annulus") return FadingKind::iid_uniform_annulus;
  throw Error(ErrorKind::InvalidParam, "unknown fading kind '" + name + "'");
}

const char* to_string(InputKind kind) {
  switch (kind) {
    case InputKind::deterministic_point: return "deterministic_point";
    case InputKind::pilot_data_product: return "pilot_data_product";
    case InputKind::exponent_profile_peak: return "exponent_profile_peak";
    case InputKind::isotropic_peak: return "isotropic_peak";
    case InputKind::exponential_power: return "exponential_power";
  }
  return "unknown";
}

void validate(const ChannelConfig& cfg) {
  if (cfg.T < 1) throw Error(ErrorKind::InvalidParam, "T must be at least 1");
  if (cfg.N < 1) throw Error(ErrorKind::InvalidParam, "N must be at least 1");
  if (!(cfg.P > 0.0) || !std::isfinite(cfg.P)) throw Error(ErrorKind::InvalidParam, "P must be positive");
  if (cfg.trials < 1) throw Error(ErrorKind::InvalidParam, "trials must be at least 1");
  if (cfg.workers < 1) throw Error(ErrorKind::InvalidParam, "workers must be at least 1");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double annulus_outer_radius() {
  // (a^2 + ab + b^2) / 3 = 1 with a = 1/2.
  return (3.0 * std::sqrt(5.0) - 1.0) / 4.0;
}

CVector sample_fading(FadingKind kind, int N, Rng& rng) {
  if (N < 1) throw Error(ErrorKind::InvalidParam, "N must be at least 1");
  if (kind == FadingKind::iid_complex_gaussian) return sample_complex_gaussian(N, rng);
  const double a = kAnnulusInner;
  const double b = annulus_outer_radius();
  CVector h(N);
  for (int i = 0; i < N; ++i) {
    const double r = a + (b - a) * uniform_open(rng);
    const double phase = 2.0 * M_PI * uniform_open(rng);
    h(i) = std::polar(r, phase);
  }
  return h;
}

namespace {

void check_dims(const CVector& h1, const CVector& h2, const CVector& x1, const CVector& x2) {
  if (h1.size() != h2.size() || x1.size() != x2.size() || h1.size() == 0 || x1.size() == 0) {
    throw Error(ErrorKind::InvalidParam, "channel dimensions do not match");
  }
}

}  // namespace

CMatrix apply_channel_noiseless(const CVector& h1, const CVector& h2, const CVector& x1,
                                const CVector& x2) {
  check_dims(h1, h2, x1, x2);
  return h1 * x1.transpose() + h2 * x2.transpose();
}

CMatrix apply_channel(const CVector& h1, const CVector& h2, const CVector& x1, const CVector& x2,
                      Rng& rng) {
  CMatrix Y = apply_channel_noiseless(h1, h2, x1, x2);
  for (Eigen::Index t = 0; t < Y.cols(); ++t) {
    for (Eigen::Index n = 0; n < Y.rows(); ++n) Y(n, t) += sample_cn(rng);
  }
  return Y;
}

InputDistribution deterministic_input(const CVector& x, double P, ConstraintKind constraint) {
  InputDistribution d;
  d.kind = InputKind::deterministic_point;
  d.constraint = constraint;
  d.P = P;
  d.point = x;
  return d;
}

InputDistribution pilot_data_input(double P, int pilot_slot, std::vector<int> silent_slots) {
  InputDistribution d;
  d.kind = InputKind::pilot_data_product;
  d.constraint = ConstraintKind::average;
  d.P = P;
  d.slot_power = P;
  d.pilot_slot = pilot_slot;
  d.silent_slots = std::move(silent_slots);
  return d;
}

InputDistribution isotropic_peak_input(double P, double norm_sq) {
  if (norm_sq > P * (1.0 + 1e-12)) {
    throw Error(ErrorKind::InvalidParam, "isotropic input energy exceeds the peak constraint");
  }
  InputDistribution d;
  d.kind = InputKind::isotropic_peak;
  d.constraint = ConstraintKind::peak;
  d.P = P;
  d.norm_sq = norm_sq;
  return d;
}

InputDistribution exponential_power_input(double P, int T) {
  InputDistribution d;
  d.kind = InputKind::exponential_power;
  d.constraint = ConstraintKind::average;
  d.P = P;
  d.norm_sq = P * T;
  return d;
}

InputDistribution exponent_profile_input(double P, double eta_bar, double eta_last) {
  InputDistribution d;
  d.kind = InputKind::exponent_profile_peak;
  d.constraint = ConstraintKind::peak;
  d.P = P;
  d.eta_bar = eta_bar;
  d.eta_last = eta_last;
  return d;
}

namespace {

cplx random_phase(double magnitude, Rng& rng) {
  return std::polar(magnitude, 2.0 * M_PI * uniform_open(rng));
}

CVector draw_once(const InputDistribution& dist, int T, Rng& rng, const CMatrix* rotation) {
  switch (dist.kind) {
    case InputKind::deterministic_point: {
      if (dist.point.size() != T) throw Error(ErrorKind::InvalidParam, "input point has wrong length");
      return dist.point;
    }
    case InputKind::pilot_data_product: {
      CVector x(T);
      const double amp = std::sqrt(dist.slot_power);
      for (int i = 0; i < T; ++i) x(i) = amp * sample_cn(rng);
      if (dist.pilot_slot >= 0 && dist.pilot_slot < T) x(dist.pilot_slot) = amp;
      for (int s : dist.silent_slots) {
        if (s >= 0 && s < T) x(s) = 0.0;
      }
      return x;
    }
    case InputKind::isotropic_peak:
      return std::sqrt(dist.norm_sq) * sample_uniform_complex_sphere(T, rng);
    case InputKind::exponential_power: {
      const double e = -dist.norm_sq * std::log(uniform_open(rng));
      return std::sqrt(e) * sample_uniform_complex_sphere(T, rng);
    }
    case InputKind::exponent_profile_peak: {
      CVector xr(T);
      const double floor_amp = std::sqrt(dist.floor_var);
      for (int i = 0; i < T; ++i) xr(i) = floor_amp * sample_cn(rng);
      if (T >= 2) {
        const int j = static_cast<int>(rng() % static_cast<std::uint64_t>(T - 1));
        xr(j) = random_phase(std::sqrt(std::pow(dist.P, dist.eta_bar)), rng);
      }
      xr(T - 1) = random_phase(std::sqrt(std::pow(dist.P, dist.eta_last)), rng);
      CVector x = rotation ? CVector(rotation->conjugate() * xr) : xr;
      const double e = x.squaredNorm();
      if (e > dist.P) x *= std::sqrt(dist.P / e);
      return x;
    }
  }
  throw Error(ErrorKind::InvalidParam, "unknown input kind");
}

}  // namespace

CVector sample_input(const InputDistribution& dist, int T, Rng& rng, const CMatrix* rotation) {
  if (T < 1) throw Error(ErrorKind::InvalidParam, "T must be at least 1");
  if (!dist.peak_threshold) return draw_once(dist, T, rng, rotation);
  constexpr int kMaxAttempts = 1000000;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CVector x = draw_once(dist, T, rng, rotation);
    if (x.squaredNorm() < *dist.peak_threshold) return x;
  }
  throw Error(ErrorKind::InvalidParam, "truncation event has negligible probability");
}

Truncation truncate_to_peak(const InputDistribution& dist, const ChannelConfig& cfg, double beta) {
  validate(cfg);
  if (!(beta > 1.0)) throw Error(ErrorKind::InvalidParam, "truncation exponent must exceed 1");
  const double threshold = std::pow(cfg.P, beta);

  std::vector<double> before(cfg.trials);
  for_each_stream(cfg.trials, cfg.workers, cfg.seed, 0x7472756eULL,
                  [&](std::size_t b, std::size_t e, Rng& rng) {
                    for (std::size_t m = b; m < e; ++m) {
                      before[m] = sample_input(dist, cfg.T, rng).squaredNorm();
                    }
                  });
  std::vector<double> exceed(cfg.trials);
  std::vector<double> after;
  after.reserve(cfg.trials);
  for (std::size_t m = 0; m < cfg.trials; ++m) {
    exceed[m] = before[m] >= threshold ? 1.0 : 0.0;
    if (before[m] < threshold) after.push_back(before[m]);
  }

  Truncation out;
  out.distribution = dist;
  out.distribution.peak_threshold =
      dist.peak_threshold ? std::min(*dist.peak_threshold, threshold) : threshold;
  out.distribution.constraint = ConstraintKind::peak;

  TruncationReport& r = out.report;
  r.threshold = threshold;
  const MeanEstimate p = mean_and_se(exceed);
  r.truncation_probability = p.mean;
  r.truncation_probability_se = p.std_error;
  r.markov_bound = cfg.T * std::pow(cfg.P, 1.0 - beta);
  r.rate_gap_order_term = std::pow(cfg.P, 1.0 - beta) * std::log2(threshold);
  r.energy_before = mean_and_se(before);
  r.energy_after = mean_and_se(after);
  r.max_energy_after = after.empty() ? 0.0 : *std::max_element(after.begin(), after.end());
  return out;
}

SampleSet generate_samples(const ChannelConfig& cfg, const InputDistribution& user1,
                           const InputDistribution* user2, std::uint64_t salt) {
  validate(cfg);
  SampleSet s;
  s.T = cfg.T;
  s.N = cfg.N;
  s.count = cfg.trials;
  const std::size_t T = static_cast<std::size_t>(cfg.T);
  const std::size_t NT = static_cast<std::size_t>(cfg.N) * T;
  s.x1.assign(s.count * T, cplx(0.0, 0.0));
  s.x2.assign(s.count * T, cplx(0.0, 0.0));
  s.y.assign(s.count * NT, cplx(0.0, 0.0));
  const bool needs_frame = user1.kind == InputKind::exponent_profile_peak;

  for_each_stream(s.count, cfg.workers, cfg.seed, salt, [&](std::size_t b, std::size_t e, Rng& rng) {
    for (std::size_t m = b; m < e; ++m) {
      CVector x2 = user2 ? sample_input(*user2, cfg.T, rng) : CVector::Zero(cfg.T);
      CVector x1;
      if (needs_frame && x2.squaredNorm() > 0.0) {
        const CMatrix U = rotation_unitary_from(x2);
        x1 = sample_input(user1, cfg.T, rng, &U);
      } else {
        x1 = sample_input(user1, cfg.T, rng);
      }
      const CVector h1 = sample_fading(cfg.fading, cfg.N, rng);
      const CVector h2 = sample_fading(cfg.fading, cfg.N, rng);
      cplx* y = s.y.data() + m * NT;
      for (int t = 0; t < cfg.T; ++t) {
        for (int n = 0; n < cfg.N; ++n) {
          y[t * cfg.N + n] = h1(n) * x1(t) + h2(n) * x2(t) + sample_cn(rng);
        }
        s.x1[m * T + t] = x1(t);
        s.x2[m * T + t] = x2(t);
      }
    }
  });
  return s;
}

SampleSet swap_users(const SampleSet& s) {
  SampleSet out = s;
  std::swap(out.x1, out.x2);
  return out;
}

MeanEstimate block_energy(const SampleSet& s, int user) {
  if (user != 1 && user != 2) throw Error(ErrorKind::InvalidParam, "user must be 1 or 2");
  std::vector<double> e(s.count);
  for (std::size_t m = 0; m < s.count; ++m) {
    e[m] = squared_norm(user == 1 ? s.x1_at(m) : s.x2_at(m), s.T);
  }
  return mean_and_se(e);
}

}  // namespace ncsimo
