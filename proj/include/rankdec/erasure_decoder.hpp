// Error-erasure decoding via transformation to a plain decoding problem.
//
// Requires n = m and the default evaluation basis (g the dual normal orbit, h
// the primal orbit). The received rows are interpolated, composed with the
// row-erasure annihilators on the left and with the shifted reverse of the
// column-erasure annihilator on the right, and folded mod x^{[m]} - x. The
// result is a received word of the dimension-augmented code [s; n, k_i +
// rho_i + gamma] hit by an error of rank at most t, so the plain decoder
// applies; messages are recovered by exact composition division.

#pragma once

#include "rankdec/channel.hpp"
#include "rankdec/interp_decoder.hpp"

namespace rankdec {

struct ErasureContext {
  InterleavedCode aug;                 // dimensions k_i + rho_i + gamma, same g and h
  LinPoly col_span_poly;               // q-degree gamma, vanishes on span{d_l}
  std::vector<LinPoly> row_span_poly;  // q-degree rho_i, vanishes on span{a^(i,R)}
  LinPoly w;                           // right factor, q-degree gamma, w_0 = 1
  std::vector<Elem> d;                 // d_l = sum_j B^(C)_{l,j} h_j
};

ErasureContext build_context(const InterleavedCode& code, const ErasureInfo& info);

WordMatrix modify_received(const InterleavedCode& code, const ErasureContext& ctx,
                           const WordMatrix& r);

DecodeOutcome decode_error_erasure(const InterleavedCode& code, const ErasureInfo& info,
                                   const WordMatrix& r, DecodeMode mode,
                                   std::uint64_t list_cap = 65536);

}  // namespace rankdec
