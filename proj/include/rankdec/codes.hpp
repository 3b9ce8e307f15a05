// Vertically interleaved rank-metric evaluation codes.
//
// s elementary codes of length n <= m share one F_q-independent evaluation
// vector g; codeword row i evaluates a linearized message polynomial of
// q-degree < k_i on g. Words are s x n matrices over F_{q^m}; the rank weight
// of a word is the F_q-rank of its (s*m) x n expansion.

#pragma once

#include <memory>
#include <vector>

#include "rankdec/ffield.hpp"
#include "rankdec/linalg.hpp"
#include "rankdec/linpoly.hpp"

namespace rankdec {

using WordMatrix = Mat;                      // s rows, n columns
using MessageTuple = std::vector<LinPoly>;   // entry i has q-degree < k_i

struct InterleavedCode {
  std::shared_ptr<const Field> field;
  std::uint32_t s = 0;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> k;
  std::vector<Elem> g;  // evaluation points, F_q-independent
  std::vector<Elem> h;  // parity roots: row u of H^(i) is h^{[k_i + u]}
  BasisPair nb;         // set when g is the default dual-normal-basis choice
  bool dual_normal = false;

  const Field& f() const { return *field; }
  std::uint32_t sum_k() const;
  std::uint32_t max_k() const;
  std::uint32_t min_k() const;
  bool equal_k() const;
  // Minimum rank distance n - max_k + 1.
  std::uint32_t min_distance() const { return n - max_k() + 1; }
};

// Default evaluation points: for n == m the dual orbit of the first normal
// basis element (and h is the primal orbit); for n < m the polynomial-basis
// prefix, with h solved from sum_j g_j^{[-c]} h_j = 0, c = 1..n-1.
InterleavedCode make_code(std::shared_ptr<const Field> field, std::uint32_t s,
                          std::uint32_t n, std::vector<std::uint32_t> k,
                          std::vector<Elem> g = {});

// rows x |points| matrix with entry (i, j) = points[j]^{[i]}.
Mat qvandermonde(const Field& f, std::size_t rows, const std::vector<Elem>& points);

WordMatrix encode(const InterleavedCode& code, const MessageTuple& msg);

// (n - k_i) x n parity-check matrix of elementary code i.
Mat parity_matrix(const InterleavedCode& code, std::uint32_t i);

// s^(i) = r^(i) H^(i)T, length n - k_i.
std::vector<std::vector<Elem>> syndromes(const InterleavedCode& code, const WordMatrix& r);

std::size_t word_rank(const InterleavedCode& code, const WordMatrix& x);
std::size_t rank_distance(const InterleavedCode& code, const WordMatrix& x,
                          const WordMatrix& y);

WordMatrix word_add(const InterleavedCode& code, const WordMatrix& x, const WordMatrix& y);
WordMatrix word_sub(const InterleavedCode& code, const WordMatrix& x, const WordMatrix& y);

}  // namespace rankdec
