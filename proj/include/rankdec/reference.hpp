// Failure predicates of the two classical interleaved decoders, and the
// analytic failure-probability / list-size bounds.
//
// rr_*: the received-word rank criterion (a stacked Moore matrix built from g
// and the received rows is rank-deficient below n-1).
// sb_*: the syndrome rank criterion (the stacked shifted-syndrome matrix has
// rank below t).

#pragma once

#include "rankdec/codes.hpp"
#include "rankdec/interp_decoder.hpp"

namespace rankdec {

// Stack of M_{n-t-1}(g) and M_{n-k_i-t}(r^(i)); all block heights must be
// positive.
Mat rr_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t);
bool rr_fails(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t);

// Stack of the s shifted syndrome matrices S^(i) of shape (n-k_i-t) x (t+1):
// S^(i)(u, v) = (s^(i)_{n-k_i-1-t-u+v})^{[t-n+k_i+1+u]}.
Mat syndrome_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t);
bool sb_fails(const InterleavedCode& code, const WordMatrix& r, std::uint32_t t);

// Instrumentation of the interpolation kernel for the failure-probability
// chain: the leading message block (dim x s) and the same block extended by
// the q_{0,0} column (dim x (s+1)).
Mat q0_matrix(const InterpSolution& sol);
Mat q0bar_matrix(const InterpSolution& sol);

struct BoundsReport {
  std::uint32_t tau_u = 0;
  std::uint32_t tau_list = 0;
  double p_lo = 0.0;   // received-word-criterion failure bound at rank t (needs t >= s)
  bool p_lo_valid = false;
  double p_sb = 0.0;   // syndrome-criterion failure bound (needs s <= tau_u)
  bool p_sb_valid = false;
  double p_alt = 0.0;  // kernel-based failure bound 4 q^{-m(s(n-tau_u)-sum_k-t+1)}
  double avg_list = 1.0;        // average list size bound at radius tau_list
  double avg_list_excess = 0.0; // avg_list - 1
};

// All probabilities clamped to [0, 1]; t is the error rank the failure bounds
// are evaluated at.
BoundsReport bounds(const InterleavedCode& code, std::uint32_t t);

}  // namespace rankdec
