#pragma once

#include <vector>

#include "ncsimo/channel.hpp"
#include "ncsimo/dof_region.hpp"

namespace ncsimo {

struct SchemeSpec {
  int T = 0;
  int pilot_slots = 0;
  double pilot_power = 0.0;
  double data_power = 0.0;
  std::vector<int> active_users;
};

SchemeSpec single_user_training_scheme(const ChannelConfig& cfg);
SchemeSpec mac_training_scheme(const ChannelConfig& cfg);
// Throws InvalidParam when slots do not add up or power exceeds P.
void validate(const SchemeSpec& scheme, double P);

struct RateEstimate {
  double value = 0.0;  // bits per channel use
  double std_error = 0.0;
};

struct RatePair {
  RateEstimate r1;
  RateEstimate r2;
};

// Pilot in slot 1 with power P, LMMSE estimate, T-1 data slots with the
// estimation error treated as Gaussian noise.
RateEstimate single_user_training_rate(const ChannelConfig& cfg);

// User k pilots alone in slot k; both users send data in the other T-2 slots.
// Per-user rate is the mean of the two successive-decoding corners. Requires T >= 3.
RatePair mac_training_rates(const ChannelConfig& cfg);

// User 1 is active in a fraction tau of the blocks, user 2 in the rest.
RatePair tdma_rates(const ChannelConfig& cfg, double tau);

std::vector<RationalPoint> dof_corner_points(int T, int N);

}  // namespace ncsimo
