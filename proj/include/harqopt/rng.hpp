#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace harqopt {

/// SplitMix64: a counter-based 64-bit generator. Each stream is the mix of a
/// strided counter, so independent streams can be derived from (seed, stream)
/// without coordination and results do not depend on worker count.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t state) : state_(state) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw on (0, 1]; never returns 0 so -log(u) is always finite.
  double uniform() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Deterministic independent stream for a given (seed, stream index) pair.
inline StreamRng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return StreamRng(StreamRng::mix(seed) ^ StreamRng::mix(stream * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull));
}

inline double sample_exponential(StreamRng& rng) { return -std::log(rng.uniform()); }

inline double sample_normal(StreamRng& rng) {
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Gamma(shape, 1) via Marsaglia-Tsang squeeze; shape < 1 handled by the
/// usual boost Gamma(shape+1) * U^(1/shape).
inline double sample_gamma(StreamRng& rng, double shape) {
  if (shape < 1.0) {
    const double g = sample_gamma(rng, shape + 1.0);
    return g * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace harqopt
