// Deterministic, platform-stable random streams.
//
// One 64-bit counter generator; every Monte-Carlo trial derives its own stream
// from (master seed, trial index), so results are independent of execution
// order and worker count.

#pragma once

#include <cmath>
#include <cstdint>

#include "rankdec/ffield.hpp"

namespace rankdec {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); rejection keeps the distribution exact.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    std::uint64_t min = (0 - n) % n;  // 2^64 mod n
    std::uint64_t x;
    do {
      x = next();
    } while (x < min);
    return x % n;
  }

  Elem elem(const Field& f) { return Elem(below(f.order())); }

  // Threshold comparison on the raw 64-bit draw; no floating-point state.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    long double t = std::ldexp((long double)p, 64);
    return next() < (std::uint64_t)t;
  }

  std::uint32_t binomial(std::uint32_t n, double p) {
    std::uint32_t c = 0;
    for (std::uint32_t i = 0; i < n; ++i)
      if (bernoulli(p)) ++c;
    return c;
  }

 private:
  std::uint64_t state_;
};

inline Rng trial_stream(std::uint64_t master_seed, std::uint64_t trial) {
  return Rng(mix64(master_seed ^ mix64(trial ^ 0x6A09E667F3BCC908ull)));
}

}  // namespace rankdec
