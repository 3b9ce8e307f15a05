// Interpolation-based list and unique decoding.
//
// Decoding solves two linear steps. Interpolation finds all multivariate
// linearized polynomials Q(x, y_1..y_s) = Q_0(x) + sum_i Q_i(y_i) with
// deg_q Q_0 < n - tau, deg_q Q_i < n - tau - (k_i - 1), vanishing on every
// column (g_j, r_j^(1..s)) of the received word. Root finding extracts the
// message tuples f with Q_0 + sum_i Q_i o f^(i) = 0 for the whole kernel.

#pragma once

#include <cstdint>
#include <vector>

#include "rankdec/codes.hpp"

namespace rankdec {

enum class DecodeMode { Unique, List };
enum class OutcomeKind { Unique, List, Failure };
enum class FailureReason { None, RankDeficient, ListOverflow, RadiusExceeded };

// Largest tau with tau*(s+1) < s*n - sum_k + s.
std::uint32_t radius_list(const InterleavedCode& code);
// floor((s*n - sum_k) / (s+1)); at most radius_list, at most one below it.
std::uint32_t radius_unique(const InterleavedCode& code);

// Kernel basis of the interpolation system at radius tau.
struct InterpSolution {
  std::uint32_t tau = 0;
  std::uint32_t n = 0, s = 0;
  std::vector<std::uint32_t> width;   // width[0] = n - tau, width[i] = n - tau - k_i + 1
  std::vector<std::uint32_t> offset;  // block starts, size s + 2
  std::vector<std::vector<Elem>> basis;

  std::size_t dim() const { return basis.size(); }
  // q^{(h)}_{i,j}: coefficient j of Q_i in kernel vector h (0 outside blocks).
  Elem q(std::size_t h, std::uint32_t i, std::uint32_t j) const {
    return j < width[i] ? basis[h][offset[i] + j] : 0;
  }
  LinPoly poly(std::size_t h, std::uint32_t i) const {
    LinPoly p;
    p.c.assign(basis[h].begin() + offset[i], basis[h].begin() + offset[i] + width[i]);
    return lp_trim(std::move(p));
  }
};

// n x (sum of block widths) system matrix; row j is
// (g_j^{[0..n-tau-1]} | r_j^(1)^{[0..n-tau-k_1]} | ...).
Mat build_interp_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t tau);

InterpSolution interpolate(const InterleavedCode& code, const WordMatrix& r, std::uint32_t tau);

// Linear system for the message coefficients. Unknown for column (i, b) is
// z^(i)_b = (f^(i)_b)^{[-b]}; row (j, h) carries q^{(h)}_{i,j-b}^{[-j]} and
// right-hand side -q^{(h)}_{0,j}^{[-j]}. Columns are ordered b-major, then i
// (only i with k_i > b present).
struct RootSystem {
  Mat a;
  std::vector<Elem> rhs;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cols;  // (i, b) per column
};

RootSystem build_rootfind_system(const InterleavedCode& code, const InterpSolution& sol);

struct DecodeOutcome {
  OutcomeKind kind = OutcomeKind::Failure;
  FailureReason reason = FailureReason::None;
  std::vector<MessageTuple> messages;  // one entry when kind == Unique
  std::uint32_t tau = 0;
  std::size_t interp_dim = 0;      // kernel dimension of the interpolation step
  std::size_t root_rank = 0;       // rank of the root-finding matrix
  std::size_t list_space_dim = 0;  // sum_k - root_rank (list mode)
  bool used_recursive = false;     // block forward substitution fast path
};

// Unique mode: requires a full-column-rank root system, solves it (recursively
// when the leading block has rank s), and keeps the result only if its
// encoding lies within tau of r. List mode: enumerates the affine solution
// space (capped at list_cap candidates) and keeps every message whose encoding
// lies within tau of r.
DecodeOutcome root_find(const InterleavedCode& code, const WordMatrix& r,
                        const InterpSolution& sol, DecodeMode mode, std::uint64_t list_cap);

// interpolate + root_find at radius_unique / radius_list.
DecodeOutcome decode(const InterleavedCode& code, const WordMatrix& r, DecodeMode mode,
                     std::uint64_t list_cap = 65536);

}  // namespace rankdec
