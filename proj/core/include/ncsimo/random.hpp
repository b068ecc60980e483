#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

#include "ncsimo/linalg.hpp"

namespace ncsimo {

using Rng = std::mt19937_64;

// Independent stream for (seed, salt, worker). Salt separates consumers that
// share one experiment seed.
Rng make_stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t worker);

// Uniform on the open interval (0, 1).
double uniform_open(Rng& rng);
double sample_standard_normal(Rng& rng);
// CN(0,1): real and imaginary parts N(0, 1/2).
cplx sample_cn(Rng& rng);

double sample_gamma(double shape, double scale, Rng& rng);
CVector sample_complex_gaussian(int n, Rng& rng);
CVector sample_uniform_complex_sphere(int n, Rng& rng);

// Splits [0, n) into `workers` contiguous chunks, each driven by its own
// stream make_stream(seed, salt, w). Chunk w runs body(begin, end, rng).
// Output depends on (seed, salt, workers) only.
void for_each_stream(std::size_t n, int workers, std::uint64_t seed, std::uint64_t salt,
                     const std::function<void(std::size_t, std::size_t, Rng&)>& body);

}  // namespace ncsimo
