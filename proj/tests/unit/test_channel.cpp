#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "ncsimo/channel.hpp"
#include "ncsimo/error.hpp"
#include "ncsimo/knn_entropy.hpp"

namespace ncsimo {
namespace {

TEST(Fading, GaussianSecondMoment) {
  Rng rng = make_stream(21, 0, 0);
  double acc = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) acc += sample_fading(FadingKind::iid_complex_gaussian, 2, rng).squaredNorm();
  EXPECT_NEAR(acc / n, 2.0, 0.02);
}

TEST(Fading, AnnulusRadiusGivesUnitPower) {
  const double a = kAnnulusInner;
  const double b = annulus_outer_radius();
  const double oracle = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      [&](double r) { return r * r / (b - a); }, a, b);
  EXPECT_NEAR(oracle, 1.0, 1e-12);

  Rng rng = make_stream(22, 0, 0);
  double acc = 0.0;
  const int n = 1000000;
  for (int i = 0; i < n; ++i) {
    const cplx h = sample_fading(FadingKind::iid_uniform_annulus, 1, rng)(0);
    ASSERT_GE(std::abs(h), a - 1e-12);
    ASSERT_LE(std::abs(h), b + 1e-12);
    acc += std::norm(h);
  }
  EXPECT_NEAR(acc / n, 1.0, 0.01);
}

TEST(Fading, KnnEntropyIsFinite) {
  for (FadingKind kind : {FadingKind::iid_complex_gaussian, FadingKind::iid_uniform_annulus}) {
    Rng rng = make_stream(23, 0, 0);
    std::vector<double> pts;
    for (int i = 0; i < 100000; ++i) {
      const CVector h = sample_fading(kind, 2, rng);
      for (int k = 0; k < 2; ++k) {
        pts.push_back(h(k).real());
        pts.push_back(h(k).imag());
      }
    }
    KnnOptions opts;
    opts.max_queries = 20000;
    const double h = knn_entropy_bits(pts, 4, opts);
    EXPECT_TRUE(std::isfinite(h));
    EXPECT_GT(h, -20.0);
    if (kind == FadingKind::iid_complex_gaussian) EXPECT_NEAR(h, 2.0 * std::log2(M_PI * M_E), 0.1);
  }
}

TEST(Channel, ZeroInputsGiveNoise) {
  Rng rng = make_stream(24, 0, 0);
  const CVector zero = CVector::Zero(4);
  double acc = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const CVector h1 = sample_fading(FadingKind::iid_complex_gaussian, 2, rng);
    const CVector h2 = sample_fading(FadingKind::iid_complex_gaussian, 2, rng);
    acc += apply_channel(h1, h2, zero, zero, rng).squaredNorm();
  }
  EXPECT_NEAR(acc / n, 8.0, 0.08);
}

TEST(Channel, NoiselessOutputHasRankAtMostTwo) {
  Rng rng = make_stream(25, 0, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const CMatrix Y = apply_channel_noiseless(sample_complex_gaussian(5, rng), sample_complex_gaussian(5, rng),
                                              sample_complex_gaussian(6, rng), sample_complex_gaussian(6, rng));
    Eigen::JacobiSVD<CMatrix> svd(Y);
    svd.setThreshold(1e-10);
    EXPECT_LE(svd.rank(), 2);
  }
}

TEST(Channel, ReceivedEnergyExpansion) {
  for (FadingKind kind : {FadingKind::iid_complex_gaussian, FadingKind::iid_uniform_annulus}) {
    Rng rng = make_stream(26, 0, 0);
    CVector x1(4), x2(4);
    x1 << 1.0, cplx(0, 2), 0.5, 0.0;
    x2 << 0.0, 1.0, cplx(1, 1), 3.0;
    double acc = 0.0;
    const int n = 400000;
    for (int i = 0; i < n; ++i) {
      const CVector h1 = sample_fading(kind, 2, rng);
      const CVector h2 = sample_fading(kind, 2, rng);
      acc += apply_channel(h1, h2, x1, x2, rng).squaredNorm();
    }
    const double expect = 2.0 * (4.0 + x1.squaredNorm() + x2.squaredNorm());
    EXPECT_NEAR(acc / n, expect, 0.01 * expect) << to_string(kind);
  }
}

TEST(Truncation, NoMassAboveThreshold) {
  ChannelConfig cfg;
  cfg.P = 100.0;
  cfg.trials = 20000;
  const InputDistribution in = isotropic_peak_input(100.0, 100.0);
  const Truncation t = truncate_to_peak(in, cfg, 1.5);
  EXPECT_EQ(t.report.truncation_probability, 0.0);
  EXPECT_EQ(t.distribution.kind, in.kind);
  EXPECT_EQ(t.distribution.norm_sq, in.norm_sq);
  EXPECT_NEAR(t.report.energy_after.mean, t.report.energy_before.mean, 1e-9);
}

TEST(Truncation, MarkovBoundHolds) {
  for (double beta : {1.1, 1.3, 2.0}) {
    ChannelConfig cfg;
    cfg.T = 4;
    cfg.P = 100.0;
    cfg.trials = 100000;
    const Truncation t = truncate_to_peak(exponential_power_input(cfg.P, cfg.T), cfg, beta);
    EXPECT_LE(t.report.truncation_probability,
              t.report.markov_bound + 3.0 * t.report.truncation_probability_se);
  }
}

TEST(Truncation, ExponentialTailOracle) {
  ChannelConfig cfg;
  cfg.T = 4;
  cfg.P = 100.0;
  cfg.trials = 200000;
  const Truncation t = truncate_to_peak(exponential_power_input(cfg.P, cfg.T), cfg, 1.5);
  const double tail = std::exp(-std::pow(cfg.P, 1.5) / (cfg.P * cfg.T));
  EXPECT_NEAR(t.report.truncation_probability, tail, 3.0 * t.report.truncation_probability_se);
  EXPECT_LT(t.report.max_energy_after, t.report.threshold);
  Rng rng = make_stream(27, 0, 0);
  for (int i = 0; i < 10000; ++i) ASSERT_LT(sample_input(t.distribution, 4, rng).squaredNorm(), t.report.threshold);
}

TEST(Truncation, RejectsBetaAtMostOne) {
  ChannelConfig cfg;
  EXPECT_THROW(truncate_to_peak(exponential_power_input(cfg.P, cfg.T), cfg, 1.0), Error);
}

TEST(Inputs, ExponentProfileRespectsPeakAndFrame) {
  Rng rng = make_stream(28, 0, 0);
  const double P = 1e4;
  const InputDistribution d = exponent_profile_input(P, 0.5, 1.0);
  const CVector x2 = sample_complex_gaussian(5, rng);
  const CMatrix U = rotation_unitary_from(x2);
  for (int i = 0; i < 1000; ++i) {
    const CVector x = sample_input(d, 5, rng, &U);
    ASSERT_LE(x.squaredNorm(), P * (1.0 + 1e-9));
    const CVector xr = U.transpose() * x;
    double head = 0.0;
    for (int k = 0; k < 4; ++k) head = std::max(head, std::norm(xr(k)));
    EXPECT_GT(std::norm(xr(4)), 10.0 * head);
  }
}

TEST(Inputs, PilotDataProduct) {
  Rng rng = make_stream(29, 0, 0);
  const InputDistribution d = pilot_data_input(9.0, 0, {2});
  const CVector x = sample_input(d, 4, rng);
  EXPECT_NEAR(x(0).real(), 3.0, 1e-12);
  EXPECT_EQ(x(2), cplx(0.0));
}

TEST(Samples, ReproducibleAndSwappable) {
  ChannelConfig cfg;
  cfg.trials = 5000;
  cfg.workers = 3;
  const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
  const SampleSet a = generate_samples(cfg, u, &u, 1);
  const SampleSet b = generate_samples(cfg, u, &u, 1);
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.x1, b.x1);
  const SampleSet s = swap_users(a);
  EXPECT_EQ(s.x1, a.x2);
  EXPECT_EQ(s.y, a.y);
  const MeanEstimate e = block_energy(a, 1);
  EXPECT_NEAR(e.mean, cfg.P, 1e-9);
}

TEST(Config, Validation) {
  ChannelConfig cfg;
  cfg.T = 0;
  EXPECT_THROW(validate(cfg), Error);
  cfg.T = 2;
  cfg.P = -1.0;
  EXPECT_THROW(validate(cfg), Error);
  EXPECT_EQ(fading_kind_from_string("annulus"), FadingKind::iid_uniform_annulus);
  EXPECT_THROW(fading_kind_from_string("rician"), Error);
}

}  // namespace
}  // namespace ncsimo
