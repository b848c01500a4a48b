#ifndef SCCRFMQ_RANDOM_HPP
#define SCCRFMQ_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "sccrfmq/core.hpp"

namespace sccrfmq {

// Splittable counter-based PRNG (SplitMix-style with a per-stream gamma).
// Every (seed, label) pair names an independent stream with a bit-stable
// draw sequence, so runs can be farmed out to worker threads in any order
// without changing results. A stream is owned by exactly one run; it is
// movable but never shared across threads.
class RandomSource {
 public:
  RandomSource(std::uint64_t seed, std::string_view label)
      : seed_(seed), label_(label) {
    const std::uint64_t h = fnv1a(label);
    state_ = mix(seed ^ h);
    gamma_ = mix(h + 0x9E3779B97F4A7C15ull) | 1ull;
  }

  std::uint64_t next_u64() {
    state_ += gamma_;
    return mix(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform index on [0, n). Multiply-shift, no modulo bias worth caring
  // about at these stream lengths.
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Standard normal, Box-Muller cosine branch: exactly two uniforms per draw.
  double normal() {
    double u1 = uniform();
    if (u1 < 1e-300) u1 = 1e-300;
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  std::uint64_t seed() const { return seed_; }
  const std::string& label() const { return label_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  std::uint64_t seed_;
  std::string label_;
  std::uint64_t state_ = 0;
  std::uint64_t gamma_ = 0;
};

}  // namespace sccrfmq

#endif  // SCCRFMQ_RANDOM_HPP
