// Small statistics helpers for the Monte-Carlo harness.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace rankdec {

struct Wilson {
  double lo = 0.0, hi = 0.0, half = 0.0;
};

// 95% Wilson score interval by default (z = 1.96).
inline Wilson wilson_interval(std::uint64_t fails, std::uint64_t trials, double z = 1.96) {
  Wilson w;
  if (trials == 0) {
    w.hi = 1.0;
    w.half = 0.5;
    return w;
  }
  double n = double(trials);
  double p = double(fails) / n;
  double z2 = z * z;
  double denom = 1.0 + z2 / n;
  double center = (p + z2 / (2.0 * n)) / denom;
  double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  w.half = half;
  w.lo = std::max(0.0, center - half);
  w.hi = std::min(1.0, center + half);
  return w;
}

inline double binom_pmf(unsigned n, double p, unsigned t) {
  if (t > n) return 0.0;
  double c = 1.0;
  for (unsigned i = 0; i < t; ++i) c = c * double(n - i) / double(i + 1);
  return c * std::pow(p, t) * std::pow(1.0 - p, n - t);
}

// P(T > tau) for T ~ Binomial(n, p).
inline double binom_tail_gt(unsigned n, double p, unsigned tau) {
  double acc = 0.0;
  for (unsigned t = tau + 1; t <= n; ++t) acc += binom_pmf(n, p, t);
  return std::min(1.0, std::max(0.0, acc));
}

}  // namespace rankdec
