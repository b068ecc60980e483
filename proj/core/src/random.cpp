#include "ncsimo/random.hpp"

#include <cmath>
#include <exception>
#include <thread>
#include <vector>

#include "ncsimo/error.hpp"

namespace ncsimo {

Rng make_stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t worker) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt), static_cast<std::uint32_t>(salt >> 32),
                    static_cast<std::uint32_t>(worker), static_cast<std::uint32_t>(worker >> 32)};
  return Rng(seq);
}

double uniform_open(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

double sample_standard_normal(Rng& rng) {
  // Marsaglia polar method, one output per call so draw counts stay simple.
  for (;;) {
    const double u = 2.0 * uniform_open(rng) - 1.0;
    const double v = 2.0 * uniform_open(rng) - 1.0;
    const double s = u * u + v * v;
    if (s < 1.0 && s > 0.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

cplx sample_cn(Rng& rng) {
  for (;;) {
    const double u = 2.0 * uniform_open(rng) - 1.0;
    const double v = 2.0 * uniform_open(rng) - 1.0;
    const double s = u * u + v * v;
    if (s < 1.0 && s > 0.0) {
      const double k = std::sqrt(-std::log(s) / s);  // each part N(0, 1/2)
      return {u * k, v * k};
    }
  }
}

namespace {

double gamma_at_least_one(double shape, Rng& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_standard_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform_open(rng);
    if (std::log(u) < 0.5 * x * x + d - d * v + d * std::log(v)) return d * v;
  }
}

}  // namespace

double sample_gamma(double shape, double scale, Rng& rng) {
  if (!(shape > 0.0) || !(scale > 0.0) || !std::isfinite(shape) || !std::isfinite(scale)) {
    throw Error(ErrorKind::InvalidParam, "gamma shape and scale must be positive");
  }
  if (shape >= 1.0) return scale * gamma_at_least_one(shape, rng);
  const double g = gamma_at_least_one(shape + 1.0, rng);
  const double log_u = std::log(uniform_open(rng));
  return scale * std::exp(std::log(g) + log_u / shape);
}

CVector sample_complex_gaussian(int n, Rng& rng) {
  if (n < 1) throw Error(ErrorKind::InvalidParam, "vector length must be positive");
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = sample_cn(rng);
  return v;
}

CVector sample_uniform_complex_sphere(int n, Rng& rng) {
  CVector v = sample_complex_gaussian(n, rng);
  return v / v.norm();
}

void for_each_stream(std::size_t n, int workers, std::uint64_t seed, std::uint64_t salt,
                     const std::function<void(std::size_t, std::size_t, Rng&)>& body) {
  if (workers < 1) throw Error(ErrorKind::InvalidParam, "worker count must be positive");
  const std::size_t w = static_cast<std::size_t>(workers);
  auto chunk = [&](std::size_t k) {
    const std::size_t begin = n * k / w;
    const std::size_t end = n * (k + 1) / w;
    Rng rng = make_stream(seed, salt, k);
    body(begin, end, rng);
  };
  if (w == 1) {
    chunk(0);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> pool;
  pool.reserve(w);
  for (std::size_t k = 0; k < w; ++k) {
    pool.emplace_back([&, k] {
      try {
        chunk(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ncsimo
