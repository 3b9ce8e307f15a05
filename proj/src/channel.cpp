#include "rankdec/channel.hpp"

#include <stdexcept>

namespace rankdec {
namespace {

// Uniform full-rank rows x cols matrix over F_q (entries 0..q-1).
Mat random_full_rank_base(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  const Field& bf = f.base_field();
  Mat m(rows, cols);
  if (rows == 0 || cols == 0) return m;
  for (;;) {
    for (Elem& v : m.a) v = Elem(rng.below(f.q()));
    if (mat_rank(bf, m) == std::min(rows, cols)) return m;
  }
}

// s x t over F_{q^m} whose (s*m) x t expansion has full rank t.
Mat random_full_col_rank_ext(const Field& f, std::size_t s, std::size_t t, Rng& rng) {
  Mat m(s, t);
  if (t == 0) return m;
  for (;;) {
    for (Elem& v : m.a) v = rng.elem(f);
    if (rank_over_base(f, m) == t) return m;
  }
}

// Rows of ext (over F_{q^m}) times base (over F_q).
Mat mul_ext_base(const Field& f, const Mat& ext, const Mat& base) {
  Mat r(ext.rows, base.cols);
  for (std::size_t i = 0; i < ext.rows; ++i)
    for (std::size_t l = 0; l < ext.cols; ++l) {
      Elem v = ext.at(i, l);
      if (!v) continue;
      for (std::size_t j = 0; j < base.cols; ++j)
        if (base.at(l, j)) r.at(i, j) = f.add(r.at(i, j), f.mul(v, base.at(l, j)));
    }
  return r;
}

// Row vector (length gamma etc.) with F_q-independent entries.
std::vector<Elem> random_independent_row(const Field& f, std::size_t len, Rng& rng) {
  std::vector<Elem> v(len);
  if (len == 0) return v;
  for (;;) {
    Mat m(1, len);
    for (std::size_t j = 0; j < len; ++j) m.at(0, j) = rng.elem(f);
    if (rank_over_base(f, m) == len) {
      for (std::size_t j = 0; j < len; ++j) v[j] = m.at(0, j);
      return v;
    }
  }
}

}  // namespace

WordMatrix sample_rank_error(const InterleavedCode& code, std::uint32_t t, Rng& rng) {
  const Field& f = code.f();
  if (t > code.n || t > code.s * f.m())
    throw std::invalid_argument("error rank exceeds min(n, s*m)");
  Mat a = random_full_col_rank_ext(f, code.s, t, rng);
  Mat b = random_full_rank_base(f, t, code.n, rng);
  return mul_ext_base(f, a, b);
}

std::pair<WordMatrix, std::uint32_t> qsc_rank_channel(const InterleavedCode& code, double p,
                                                      Rng& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("channel parameter must be in [0,1]");
  std::uint32_t t = rng.binomial(code.n, p);
  return {sample_rank_error(code, t, rng), t};
}

ChannelDraw sample_erasure_scenario(const InterleavedCode& code,
                                    const std::vector<std::uint32_t>& rho,
                                    std::uint32_t gamma, std::uint32_t t, Rng& rng) {
  const Field& f = code.f();
  std::vector<std::uint32_t> rho_n = rho;
  if (rho_n.empty()) rho_n.assign(code.s, 0);
  if (rho_n.size() != code.s) throw std::invalid_argument("need one rho per elementary code");
  for (std::uint32_t ri : rho_n)
    if (ri > code.n) throw std::invalid_argument("row erasure count exceeds n");
  if (gamma > code.n) throw std::invalid_argument("column erasure count exceeds n");
  if (t > code.n || t > code.s * f.m())
    throw std::invalid_argument("error rank exceeds min(n, s*m)");

  ChannelDraw d;
  d.t = t;
  d.info.rho = rho_n;
  d.info.gamma = gamma;

  // Full part first; keeps the zero-erasure case stream-identical to
  // sample_rank_error.
  d.truth.a_full = random_full_col_rank_ext(f, code.s, t, rng);
  d.truth.b_full = random_full_rank_base(f, t, code.n, rng);
  d.error = mul_ext_base(f, d.truth.a_full, d.truth.b_full);

  // Row erasures: receiver knows a^(i,R), not B^(i,R).
  d.info.a_row.resize(code.s);
  d.truth.b_row.resize(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    d.info.a_row[i] = random_independent_row(f, rho_n[i], rng);
    d.truth.b_row[i] = random_full_rank_base(f, rho_n[i], code.n, rng);
    for (std::uint32_t l = 0; l < rho_n[i]; ++l) {
      Elem v = d.info.a_row[i][l];
      for (std::uint32_t j = 0; j < code.n; ++j)
        if (d.truth.b_row[i].at(l, j))
          d.error.at(i, j) = f.add(d.error.at(i, j), f.mul(v, d.truth.b_row[i].at(l, j)));
    }
  }

  // Column erasures: receiver knows the common B^(C), not the a^(i,C).
  d.info.b_col = random_full_rank_base(f, gamma, code.n, rng);
  d.truth.a_col.resize(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    d.truth.a_col[i] = random_independent_row(f, gamma, rng);
    for (std::uint32_t l = 0; l < gamma; ++l) {
      Elem v = d.truth.a_col[i][l];
      for (std::uint32_t j = 0; j < code.n; ++j)
        if (d.info.b_col.at(l, j))
          d.error.at(i, j) = f.add(d.error.at(i, j), f.mul(v, d.info.b_col.at(l, j)));
    }
  }
  return d;
}

}  // namespace rankdec
