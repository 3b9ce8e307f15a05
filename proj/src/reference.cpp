#include "rankdec/reference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rankdec {

Mat rr_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t) {
  const Field& f = code.f();
  if (r.rows != code.s || r.cols != code.n) throw std::invalid_argument("word shape mismatch");
  if (code.n < t + 2) throw std::invalid_argument("top block height not positive");
  std::size_t rows = code.n - t - 1;
  for (std::uint32_t i = 0; i < code.s; ++i) {
    if (code.n < code.k[i] + t + 1) throw std::invalid_argument("received block height not positive");
    rows += code.n - code.k[i] - t;
  }
  Mat m(rows, code.n);
  std::size_t row = 0;
  Mat top = qvandermonde(f, code.n - t - 1, code.g);
  for (std::size_t u = 0; u < top.rows; ++u, ++row)
    for (std::uint32_t j = 0; j < code.n; ++j) m.at(row, j) = top.at(u, j);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::vector<Elem> ri(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) ri[j] = r.at(i, j);
    Mat blk = qvandermonde(f, code.n - code.k[i] - t, ri);
    for (std::size_t u = 0; u < blk.rows; ++u, ++row)
      for (std::uint32_t j = 0; j < code.n; ++j) m.at(row, j) = blk.at(u, j);
  }
  return m;
}

bool rr_fails(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t) {
  return mat_rank(code.f(), rr_matrix(code, r, t)) < code.n - 1;
}

Mat syndrome_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t) {
  const Field& f = code.f();
  std::vector<std::vector<Elem>> syn = syndromes(code, r);
  std::size_t rows = 0;
  for (std::uint32_t i = 0; i < code.s; ++i) {
    if (code.n < code.k[i] + t + 1) throw std::invalid_argument("syndrome block height not positive");
    rows += code.n - code.k[i] - t;
  }
  Mat m(rows, t + 1);
  std::size_t row = 0;
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::uint32_t h = code.n - code.k[i] - t;  // block height
    for (std::uint32_t u = 0; u < h; ++u, ++row) {
      std::int64_t shift = std::int64_t(t) - code.n + code.k[i] + 1 + u;
      for (std::uint32_t v = 0; v <= t; ++v) {
        std::uint32_t idx = code.n - code.k[i] - 1 - t - u + v;
        m.at(row, v) = f.frobenius(syn[i][idx], shift);
      }
    }
  }
  return m;
}

bool sb_fails(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t) {
  if (t == 0) return false;  // rank cannot be below zero
  return mat_rank(code.f(), syndrome_matrix(code, r, t)) < t;
}

Mat q0_matrix(const InterpSolution& sol) {
  Mat m(sol.dim(), sol.s);
  for (std::size_t h = 0; h < sol.dim(); ++h)
    for (std::uint32_t i = 1; i <= sol.s; ++i) m.at(h, i - 1) = sol.q(h, i, 0);
  return m;
}

Mat q0bar_matrix(const InterpSolution& sol) {
  Mat m(sol.dim(), sol.s + 1);
  for (std::size_t h = 0; h < sol.dim(); ++h)
    for (std::uint32_t i = 0; i <= sol.s; ++i) m.at(h, i) = sol.q(h, i, 0);
  return m;
}

namespace {

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

BoundsReport bounds(const InterleavedCode& code, std::uint32_t t) {
  const Field& f = code.f();
  BoundsReport b;
  b.tau_u = radius_unique(code);
  b.tau_list = radius_list(code);
  double q = double(f.q());
  double m = double(f.m());
  double s = double(code.s);
  double n = double(code.n);
  double sumk = double(code.sum_k());
  double td = double(t);

  b.p_lo_valid = t >= code.s;
  double qm = std::pow(q, m);
  b.p_lo = clamp01(1.0 - (1.0 - 4.0 / qm) * std::pow(1.0 - std::pow(q, m * (s - td)), s));

  b.p_sb_valid = code.s <= b.tau_u;
  b.p_sb = clamp01(3.5 * std::pow(q, -m * ((s + 1.0) * (double(b.tau_u) - td) + 1.0)));

  b.p_alt = clamp01(4.0 * std::pow(q, -m * (s * (n - double(b.tau_u)) - sumk - td + 1.0)));

  double tl = double(b.tau_list);
  double expo = (s * m + n) * tl - tl * tl - s * m * n;
  double excess = 4.0 * (std::pow(q, m * sumk) - 1.0) * std::pow(q, expo);
  if (!std::isfinite(excess)) excess = 1.0;
  b.avg_list_excess = excess;
  b.avg_list = 1.0 + excess;
  return b;
}

}  // namespace rankdec
