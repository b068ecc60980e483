#pragma once

#include "ncsimo/channel.hpp"
#include "ncsimo/genie.hpp"
#include "ncsimo/report.hpp"

namespace ncsimo {

struct ConditionalEntropy {
  double bits = 0.0;           // h(Y | x1, x2)
  bool exact = false;          // true for Gaussian fading
  double dominant_term = 0.0;  // N log2((1+|x2|^2)(1+sum_{i<T}|x~1i|^2) + |x~1T|^2)
  double constant_term = 0.0;  // N T log2(pi e); exact only for Gaussian fading
};

ConditionalEntropy conditional_entropy_given_inputs(const CVector& x1, const CVector& x2,
                                                    const ChannelConfig& cfg);

// h(Z) for Z in C^{N x T} with i.i.d. CN(0,1) entries.
double noise_entropy_bits(int N, int T);

// The duality bounds below report `value` in bits per channel use:
//   (E[-log2 q] - E[h(Y|X)] + genie cost) / T.
// Auxiliary parameters are fitted on the first half of the blocks and the
// expectation is taken over the second half. Components (bits per block):
//   cross_entropy, conditional_entropy, genie_cost, noise_entropy,
//   analytic_rhs, rhs_gap (= cross_entropy - noise_entropy - analytic_rhs),
//   rhs_slack, and per-branch / per-column breakdowns.
// Throws LowSnrRegime when a pilot-column population has mean <= 1.
BoundReport duality_bound_single_user(const InputDistribution& input, const ChannelConfig& cfg);
BoundReport duality_bound_single_user(const SampleSet& samples, const ChannelConfig& cfg);

BoundReport duality_bound_mac_user1(const InputDistribution& input1,
                                    const InputDistribution& input2, const ChannelConfig& cfg,
                                    MacRegime regime);
BoundReport duality_bound_mac_user1(const SampleSet& samples, const ChannelConfig& cfg,
                                    MacRegime regime);

// One-sided gap-versus-slack check read off a duality report (or one of its branches).
struct SlackCheck {
  double gap = 0.0;     // E[-log q] - h(Z) - RHS, bits per block
  double std_error = 0.0;
  double slack = 0.0;   // 2 log2 log2 P + 5
  double probability = 1.0;
  bool holds() const;
  double margin() const;  // slack + 3 SE - gap
};

SlackCheck slack_check(const BoundReport& report, const std::string& prefix = "");

}  // namespace ncsimo
