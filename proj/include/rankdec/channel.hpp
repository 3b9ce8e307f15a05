// Rank-error and error-erasure channels.
//
// A rank-t error is A*B with A uniform full-rank over F_q of shape (s*m) x t
// (drawn as an s x t matrix over F_{q^m}, which is the same distribution) and
// B uniform full-rank t x n over F_q; the product has rank exactly t and is
// uniform over rank-t words. The erasure channel adds row-space and
// column-space components whose side information a^(i,R), B^(C) is revealed
// to the receiver.

#pragma once

#include <utility>
#include <vector>

#include "rankdec/codes.hpp"
#include "rankdec/rng.hpp"

namespace rankdec {

// What the receiver learns about the erasure components.
struct ErasureInfo {
  std::vector<std::vector<Elem>> a_row;  // a^(i,R), F_q-independent entries, length rho_i
  Mat b_col;                             // B^(C), gamma x n over F_q, full rank
  std::vector<std::uint32_t> rho;
  std::uint32_t gamma = 0;
};

// The components the receiver does not see; kept only so tests can check the
// sampler and the transform algebra.
struct HiddenFactors {
  Mat a_full;                          // s x t over F_{q^m}
  Mat b_full;                          // t x n over F_q
  std::vector<Mat> b_row;              // B^(i,R), rho_i x n over F_q
  std::vector<std::vector<Elem>> a_col;  // a^(i,C), length gamma per i
};

struct ChannelDraw {
  WordMatrix error;
  std::uint32_t t = 0;  // rank of the full-error component
  ErasureInfo info;
  HiddenFactors truth;
};

// Uniform rank-t word; t <= min(n, s*m).
WordMatrix sample_rank_error(const InterleavedCode& code, std::uint32_t t, Rng& rng);

// t ~ Binomial(n, p), then a uniform rank-t word. Returns (error, t).
std::pair<WordMatrix, std::uint32_t> qsc_rank_channel(const InterleavedCode& code, double p,
                                                      Rng& rng);

// Full error of rank t plus rho_i row erasures per row and gamma column
// erasures shared by all rows. The full component is drawn first, so with
// rho = 0 and gamma = 0 the error equals sample_rank_error on the same stream.
ChannelDraw sample_erasure_scenario(const InterleavedCode& code,
                                    const std::vector<std::uint32_t>& rho,
                                    std::uint32_t gamma, std::uint32_t t, Rng& rng);

}  // namespace rankdec
