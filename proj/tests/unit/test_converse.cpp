#include <cmath>

#include <gtest/gtest.h>

#include "ncsimo/calibration.hpp"
#include "ncsimo/converse.hpp"
#include "ncsimo/error.hpp"
#include "ncsimo/exponent.hpp"
#include "ncsimo/knn_entropy.hpp"
#include "ncsimo/penalty.hpp"

namespace ncsimo {
namespace {

CVector vec(std::initializer_list<cplx> xs) {
  CVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (cplx x : xs) v(i++) = x;
  return v;
}

ChannelConfig config(int T, int N, double db, std::size_t trials, std::uint64_t seed = 7) {
  ChannelConfig cfg;
  cfg.T = T;
  cfg.N = N;
  cfg.P = db_to_linear(db);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.workers = 2;
  return cfg;
}

// ------------------------------------------------------------------ genie

TEST(Genie, SingleUserIndex) {
  EXPECT_EQ(genie_index_single(vec({1.0, 3.0, 2.0})).slot, 1);
  EXPECT_EQ(genie_index_single(vec({2.0, 2.0})).slot, 0);
  Rng rng = make_stream(41, 0, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const CVector x = sample_complex_gaussian(6, rng);
    const int v = genie_index_single(x).slot;
    for (int i = 0; i < 6; ++i) EXPECT_GE(std::norm(x(v)), std::norm(x(i)));
  }
}

TEST(Genie, MacIndexFirstRegime) {
  const GenieIndex g = genie_index_mac(vec({1.0, 5.0, 2.0}), 0.0, MacRegime::T_ge_N_plus_1);
  EXPECT_EQ(g.slot, 1);
  EXPECT_FALSE(g.u.has_value());
  // The last slot is never chosen in this regime.
  EXPECT_EQ(genie_index_mac(vec({1.0, 2.0, 9.0}), 0.0, MacRegime::T_ge_N_plus_1).slot, 1);
}

TEST(Genie, MacIndexSecondRegime) {
  const GenieIndex g = genie_index_mac(vec({1.0, 1.0, std::sqrt(10.0)}), 3.0, MacRegime::T_le_N);
  EXPECT_EQ(g.slot, 2);
  EXPECT_EQ(g.u, 1);
  const GenieIndex z = genie_index_mac(CVector::Zero(3), 0.0, MacRegime::T_le_N);
  EXPECT_EQ(z.slot, 0);
  EXPECT_EQ(z.u, 0);
}

TEST(Genie, CostsAndRegimes) {
  EXPECT_DOUBLE_EQ(genie_cost_single(4), 2.0);
  EXPECT_DOUBLE_EQ(genie_cost_mac(5, MacRegime::T_ge_N_plus_1), 2.0);
  EXPECT_DOUBLE_EQ(genie_cost_mac(4, MacRegime::T_le_N), 3.0);
  EXPECT_EQ(natural_regime(5, 3), MacRegime::T_ge_N_plus_1);
  EXPECT_EQ(natural_regime(3, 4), MacRegime::T_le_N);
  EXPECT_NO_THROW(check_regime(4, 2, MacRegime::T_ge_N_plus_1));
  for (auto [T, N, r] : {std::tuple{3, 4, MacRegime::T_ge_N_plus_1}, std::tuple{5, 3, MacRegime::T_le_N},
                         std::tuple{1, 1, MacRegime::T_le_N}}) {
    try {
      check_regime(T, N, r);
      FAIL() << T << "," << N;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::RegimeUnsupported);
    }
  }
}

// ---------------------------------------------------- conditional entropy

TEST(ConditionalEntropy, PureNoise) {
  const ChannelConfig cfg = config(4, 2, 20.0, 1);
  const ConditionalEntropy h = conditional_entropy_given_inputs(CVector::Zero(4), CVector::Zero(4), cfg);
  EXPECT_TRUE(h.exact);
  EXPECT_NEAR(h.bits, 8.0 * std::log2(M_PI * M_E), 1e-12);
  EXPECT_NEAR(h.bits, noise_entropy_bits(2, 4), 1e-12);
}

TEST(ConditionalEntropy, SingleUserDominantTerm) {
  ChannelConfig cfg = config(4, 3, 20.0, 1);
  cfg.fading = FadingKind::iid_uniform_annulus;
  const CVector x1 = vec({1.0, cplx(0, 2), 3.0, 0.5});
  const ConditionalEntropy h = conditional_entropy_given_inputs(x1, CVector::Zero(4), cfg);
  EXPECT_FALSE(h.exact);
  EXPECT_NEAR(h.dominant_term, 3.0 * std::log2(1.0 + x1.squaredNorm()), 1e-10);
}

TEST(ConditionalEntropy, ExactMatchesDeterminant) {
  const ChannelConfig cfg = config(4, 2, 20.0, 1);
  Rng rng = make_stream(42, 0, 0);
  const CVector x1 = sample_complex_gaussian(4, rng) * 3.0;
  const CVector x2 = sample_complex_gaussian(4, rng) * 2.0;
  const CMatrix K = CMatrix::Identity(4, 4) + x1.conjugate() * x1.transpose() + x2.conjugate() * x2.transpose();
  const double expect = 2.0 * log_det_hermitian_psd(K) + 8.0 * std::log2(M_PI * M_E);
  EXPECT_NEAR(conditional_entropy_given_inputs(x1, x2, cfg).bits, expect, 1e-9);
}

TEST(ConditionalEntropy, KnnOracle) {
  const int T = 4;
  const int N = 2;
  Rng rng = make_stream(43, 0, 0);
  const CVector x1 = sample_complex_gaussian(T, rng);
  const CVector x2 = sample_complex_gaussian(T, rng) * 0.7;
  const ChannelConfig cfg = config(T, N, 20.0, 1);
  const double exact = conditional_entropy_given_inputs(x1, x2, cfg).bits;
  std::vector<double> pts;
  const int n = 200000;
  pts.reserve(static_cast<std::size_t>(n) * 2 * N * T);
  for (int i = 0; i < n; ++i) {
    const CVector h1 = sample_fading(FadingKind::iid_complex_gaussian, N, rng);
    const CVector h2 = sample_fading(FadingKind::iid_complex_gaussian, N, rng);
    const CMatrix Y = apply_channel(h1, h2, x1, x2, rng);
    for (int t = 0; t < T; ++t)
      for (int r = 0; r < N; ++r) {
        pts.push_back(Y(r, t).real());
        pts.push_back(Y(r, t).imag());
      }
  }
  KnnOptions opts;
  opts.max_queries = 20000;
  opts.seed = 3;
  const double knn = knn_entropy_bits(pts, 2 * N * T, opts);
  EXPECT_LE(std::abs(knn - exact) / (N * T), 0.15) << "knn " << knn << " exact " << exact;
}

// -------------------------------------------------------------- penalties

TEST(Penalty, FZero) { EXPECT_DOUBLE_EQ(eval_f(CVector::Zero(4), CVector::Zero(4), 2), 0.0); }

TEST(Penalty, FSingleEntry) {
  const double P = 1000.0;
  const int T = 5;
  const int N = 3;
  CVector x1 = CVector::Zero(T);
  x1(1) = std::sqrt(P);
  EXPECT_NEAR(eval_f(x1, CVector::Zero(T), N), (T - 1) * std::log2(1.0 + P), 1e-10);
  // Spread head energy: the N log2(1+S) term uses the head sum.
  x1(0) = std::sqrt(P / 2);
  const double S = 1.5 * P;
  const double expect = (N + T - 2) * std::log2(1.0 + P) + std::log2(1.0 + P) - N * std::log2(1.0 + S);
  EXPECT_NEAR(eval_f(x1, CVector::Zero(T), N), expect, 1e-10);
}

TEST(Penalty, GZeroIsCaseA) {
  EXPECT_EQ(classify_g(CVector::Zero(3), CVector::Zero(3)), GCase::A);
  EXPECT_DOUBLE_EQ(eval_g(CVector::Zero(3), CVector::Zero(3), 100.0, 4), 0.0);
}

TEST(Penalty, GCaseC) {
  const CVector x1 = vec({1.0, 0.0, 10.0});
  const CVector x2 = vec({0.0, 0.0, std::sqrt(3.0)});
  EXPECT_EQ(classify_g(x1, x2), GCase::C);
  EXPECT_NEAR(eval_g(x1, x2, 100.0, 4), 2.0 * std::log2(1.0 + 100.0 / 4.0), 1e-12);
}

TEST(Penalty, GCaseBHandExpansion) {
  // Head max 10, last 30, ||x2||^2 = 3, P = 100, T = 3, N = 2.
  const CVector x1 = vec({std::sqrt(10.0), 1.0, std::sqrt(30.0)});
  const CVector x2 = vec({0.0, std::sqrt(3.0), 0.0});
  EXPECT_EQ(classify_g(x1, x2), GCase::B);
  const double expect = 1.0 * std::log2(11.0) + 2.0 * std::log2(34.0 / 104.0) + std::log2(26.0);
  EXPECT_NEAR(eval_g(x1, x2, 100.0, 2), expect, 1e-12);
}

// Inputs at P^eta: x~1 = (P^{a/2}, 0, ..., P^{b/2}), ||x2||^2 = P^o.
struct ExponentInputs {
  CVector x1;
  CVector x2;
};

ExponentInputs exponent_inputs(int T, double P, double a, double b, double o) {
  ExponentInputs in{CVector::Zero(T), CVector::Zero(T)};
  in.x1(0) = std::pow(P, a / 2);
  in.x1(T - 1) = std::pow(P, b / 2);
  in.x2(T - 1) = std::pow(P, o / 2);
  return in;
}

TEST(Penalty, FSlopeMatchesBracket) {
  const int T = 4;
  const int N = 2;
  Rng rng = make_stream(44, 0, 0);
  std::uniform_int_distribution<int> q(0, 4);
  for (int rep = 0; rep < 20; ++rep) {
    const double a = q(rng) / 4.0;
    const double b = q(rng) / 4.0;
    const double o = q(rng) / 4.0;
    // Corrections decay like P^(-1/4) on this quarter grid, so measure far out.
    const auto lo = exponent_inputs(T, 1e10, a, b, o);
    const auto hi = exponent_inputs(T, 1e12, a, b, o);
    const double slope = (eval_f(hi.x1, hi.x2, N) - eval_f(lo.x1, lo.x2, N)) / std::log2(100.0);
    EXPECT_NEAR(slope, T * f_bracket(a, b, o, T, N), 0.02) << a << " " << b << " " << o;
  }
}

TEST(Penalty, GSlopeMatchesBracketAwayFromCaseBoundaries) {
  const int T = 3;
  const int N = 4;
  const double P0 = 1e6;
  const double P1 = 1e8;
  for (auto [a, b, o] : {std::tuple{0.5, 0.25, 0.5}, std::tuple{0.25, 1.0, 0.5}, std::tuple{1.0, 0.75, 0.0},
                         std::tuple{0.75, 1.0, 0.5}, std::tuple{0.0, 0.5, 0.25}}) {
    const auto lo = exponent_inputs(T, P0, a, b, o);
    const auto hi = exponent_inputs(T, P1, a, b, o);
    const double slope = (eval_g(hi.x1, hi.x2, P1, N) - eval_g(lo.x1, lo.x2, P0, N)) / std::log2(100.0);
    EXPECT_NEAR(slope, T * g_bracket(a, b, o, T, N), 0.02) << a << " " << b << " " << o;
    EXPECT_EQ(classify_g(hi.x1, hi.x2), g_case(a, b, o));
  }
}

// ---------------------------------------------------------- duality bounds

TEST(DualitySingleUser, ZeroInputGivesNonnegativeBound) {
  const ChannelConfig cfg = config(4, 2, 20.0, 50000);
  const BoundReport r = duality_bound_single_user(deterministic_input(CVector::Zero(4), cfg.P, ConstraintKind::peak), cfg);
  EXPECT_GE(r.value, -3.0 * r.std_error);
}

TEST(DualitySingleUser, GapWithinSlack) {
  for (double db : {10.0, 20.0, 30.0}) {
    const ChannelConfig cfg = config(4, 2, db, 50000);
    const BoundReport r = duality_bound_single_user(isotropic_peak_input(cfg.P, cfg.P), cfg);
    const SlackCheck c = slack_check(r);
    EXPECT_TRUE(c.holds()) << db << " gap " << c.gap << " slack " << c.slack;
    EXPECT_NEAR(c.slack, calibration::loglog_slack(cfg.P), 1e-12);
    EXPECT_NEAR(r.component("genie_cost")->value, 2.0, 1e-12);
  }
}

TEST(DualitySingleUser, SlopeBelowSingleUserDof) {
  const ChannelConfig lo = config(4, 2, 30.0, 100000);
  const ChannelConfig hi = config(4, 2, 40.0, 100000);
  const double b30 = duality_bound_single_user(isotropic_peak_input(lo.P, lo.P), lo).value;
  const double b40 = duality_bound_single_user(isotropic_peak_input(hi.P, hi.P), hi).value;
  EXPECT_LE((b40 - b30) / std::log2(10.0), 0.75 + 0.05);
}

TEST(DualitySingleUser, ReportsFitsAndRemainders) {
  const ChannelConfig cfg = config(4, 2, 20.0, 20000);
  const BoundReport r = duality_bound_single_user(isotropic_peak_input(cfg.P, cfg.P), cfg);
  EXPECT_FALSE(r.fits.empty());
  for (const auto& f : r.fits) {
    EXPECT_GT(f.alpha, 0.0);
    EXPECT_LE(f.alpha, 1.0);
    EXPECT_GT(f.beta, 0.0);
  }
  EXPECT_TRUE(r.remainder("aux_remainder").has_value());
  EXPECT_TRUE(r.remainder("loglog_envelope").has_value());
}

TEST(DualitySingleUser, LowSnrPilotIsReported) {
  SampleSet s;
  s.T = 3;
  s.N = 1;
  s.count = 1000;
  s.x1.assign(3000, cplx(0.1));
  s.x2.assign(3000, cplx(0.0));
  s.y.assign(3000, cplx(0.5));
  const ChannelConfig cfg = config(3, 1, -20.0, s.count);
  try {
    duality_bound_single_user(s, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::LowSnrRegime);
  }
}

TEST(DualityMac, RegimeMismatch) {
  const ChannelConfig cfg = config(4, 2, 20.0, 100);
  const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
  try {
    duality_bound_mac_user1(u, u, cfg, MacRegime::T_le_N);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RegimeUnsupported);
  }
}

TEST(DualityMac, GapWithinSlackFirstRegime) {
  const ChannelConfig cfg = config(4, 2, 20.0, 50000);
  const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
  const BoundReport r = duality_bound_mac_user1(u, u, cfg, MacRegime::T_ge_N_plus_1);
  const SlackCheck c = slack_check(r);
  EXPECT_TRUE(c.holds()) << c.gap;
  EXPECT_NEAR(r.component("genie_cost")->value, std::log2(3.0), 1e-12);
}

TEST(DualityMac, BranchBookkeepingSecondRegime) {
  const ChannelConfig cfg = config(3, 4, 20.0, 20000);
  const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
  const BoundReport r = duality_bound_mac_user1(u, u, cfg, MacRegime::T_le_N);
  double total = 0.0;
  for (int b = 0; b < 3; ++b) {
    const std::string p = "branch" + std::to_string(b) + ".";
    ASSERT_TRUE(r.component(p + "probability").has_value());
    ASSERT_TRUE(r.component(p + "rhs_gap").has_value());
    total += r.component(p + "probability")->value;
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(r.component("genie_cost")->value, std::log2(6.0), 1e-12);
  EXPECT_TRUE(slack_check(r).holds());
}

// With user 2 silent the rotation is trivial and the MAC bound differs from
// the single-user one only through the genie range and the last-slot aux law.
TEST(DualityMac, SilentSecondUserCollapses) {
  const ChannelConfig cfg = config(4, 2, 20.0, 100000);
  const InputDistribution u1 = isotropic_peak_input(cfg.P, cfg.P);
  const InputDistribution u2 = deterministic_input(CVector::Zero(4), cfg.P, ConstraintKind::peak);
  const SampleSet s = generate_samples(cfg, u1, &u2, 5);
  const BoundReport mac = duality_bound_mac_user1(s, cfg, MacRegime::T_ge_N_plus_1);
  const BoundReport su = duality_bound_single_user(s, cfg);
  EXPECT_NEAR(mac.component("conditional_entropy")->value, su.component("conditional_entropy")->value, 1e-9);
  const double se = std::hypot(mac.std_error, su.std_error);
  EXPECT_LE(std::abs(mac.value - su.value), 2.0 * se + std::log2(4.0 / 3.0)) << mac.value << " " << su.value;
}

TEST(DualityMac, SlopeFollowsExponentAlgebra) {
  const int T = 5;
  const int N = 3;
  std::vector<double> v;
  for (double db : {30.0, 40.0}) {
    const ChannelConfig cfg = config(T, N, db, 100000);
    const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
    v.push_back(duality_bound_mac_user1(u, u, cfg, MacRegime::T_ge_N_plus_1).value);
  }
  const double slope = (v[1] - v[0]) / std::log2(10.0);
  EXPECT_LE(slope, f_bracket(1.0, 1.0, 1.0, T, N) + 0.05) << slope;
}

TEST(DualityMac, Deterministic) {
  const ChannelConfig cfg = config(4, 2, 20.0, 5000);
  const InputDistribution u = isotropic_peak_input(cfg.P, cfg.P);
  const BoundReport a = duality_bound_mac_user1(u, u, cfg, MacRegime::T_ge_N_plus_1);
  const BoundReport b = duality_bound_mac_user1(u, u, cfg, MacRegime::T_ge_N_plus_1);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.std_error, b.std_error);
}

}  // namespace
}  // namespace ncsimo
