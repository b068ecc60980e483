#include <cmath>

#include <gtest/gtest.h>

#include "ncsimo/achievability.hpp"
#include "ncsimo/error.hpp"

namespace ncsimo {
namespace {

ChannelConfig config(int T, int N, double db, std::size_t trials = 100000) {
  ChannelConfig cfg;
  cfg.T = T;
  cfg.N = N;
  cfg.P = db_to_linear(db);
  cfg.trials = trials;
  cfg.seed = 7;
  cfg.workers = 2;
  return cfg;
}

double slope(const std::vector<double>& db, const std::vector<double>& r) {
  std::vector<double> x;
  for (double d : db) x.push_back(std::log2(db_to_linear(d)));
  return fitted_slope(x, r);
}

TEST(Schemes, Validation) {
  const ChannelConfig cfg = config(5, 2, 20.0);
  EXPECT_NO_THROW(validate(single_user_training_scheme(cfg), cfg.P));
  EXPECT_NO_THROW(validate(mac_training_scheme(cfg), cfg.P));
  SchemeSpec bad = mac_training_scheme(cfg);
  bad.pilot_slots = 6;
  EXPECT_THROW(validate(bad, cfg.P), Error);
  SchemeSpec loud = single_user_training_scheme(cfg);
  loud.data_power = 2.0 * cfg.P;
  EXPECT_THROW(validate(loud, cfg.P), Error);
}

TEST(SingleUserTraining, Slope) {
  for (int T : {4, 8}) {
    std::vector<double> r;
    for (double db : {30.0, 40.0, 50.0}) r.push_back(single_user_training_rate(config(T, 2, db)).value);
    EXPECT_NEAR(slope({30, 40, 50}, r), 1.0 - 1.0 / T, 0.05) << T;
  }
}

TEST(MacTraining, Slope) {
  std::vector<double> r1, r2;
  for (double db : {30.0, 50.0}) {
    const RatePair p = mac_training_rates(config(8, 2, db));
    r1.push_back(p.r1.value);
    r2.push_back(p.r2.value);
  }
  EXPECT_NEAR(slope({30, 50}, r1), 0.75, 0.05);
  EXPECT_NEAR(slope({30, 50}, r2), 0.75, 0.05);
}

TEST(MacTraining, PositiveAtZeroDb) {
  const RatePair p = mac_training_rates(config(8, 2, 0.0));
  EXPECT_GT(p.r1.value, 0.0);
  EXPECT_TRUE(std::isfinite(p.r1.value));
  EXPECT_GT(p.r2.value, 0.0);
}

TEST(MacTraining, ReceiveDiversityHelps) {
  const RatePair one = mac_training_rates(config(8, 1, 20.0));
  const RatePair four = mac_training_rates(config(8, 4, 20.0));
  EXPECT_GT(four.r1.value, one.r1.value);
  EXPECT_GT(four.r2.value, one.r2.value);
}

TEST(MacTraining, NeedsThreeSlots) {
  try {
    mac_training_rates(config(2, 2, 20.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::RegimeUnsupported);
  }
}

TEST(Tdma, Shares) {
  const ChannelConfig cfg = config(4, 2, 20.0);
  const RatePair none = tdma_rates(cfg, 0.0);
  EXPECT_EQ(none.r1.value, 0.0);
  const RatePair half = tdma_rates(cfg, 0.5);
  EXPECT_NEAR(half.r1.value, half.r2.value, 2.0 * std::hypot(half.r1.std_error, half.r2.std_error) + 1e-12);
  EXPECT_NEAR(half.r1.value, 0.5 * single_user_training_rate(cfg).value, 1e-9);
  EXPECT_THROW(tdma_rates(cfg, 1.5), Error);
}

TEST(Corners, Examples) {
  using R = Rational;
  const std::vector<RationalPoint> c53 = dof_corner_points(5, 3);
  for (const RationalPoint& p : {RationalPoint{R(4, 5), 0}, RationalPoint{0, R(4, 5)}, RationalPoint{R(3, 5), R(3, 5)}}) {
    EXPECT_NE(std::find(c53.begin(), c53.end(), p), c53.end());
  }
  const std::vector<RationalPoint> c24 = dof_corner_points(2, 4);
  EXPECT_EQ(c24.size(), 2u);
  EXPECT_NE(std::find(c24.begin(), c24.end(), RationalPoint{R(1, 2), 0}), c24.end());
  EXPECT_NE(std::find(c24.begin(), c24.end(), RationalPoint{0, R(1, 2)}), c24.end());
  const std::vector<RationalPoint> c1 = dof_corner_points(1, 3);
  ASSERT_EQ(c1.size(), 1u);
  EXPECT_EQ(c1[0], (RationalPoint{0, 0}));
}

}  // namespace
}  // namespace ncsimo
