// Dense matrices over a Field, with deterministic Gaussian elimination.
//
// Conventions fixed across the library: columns are scanned left to right; the
// pivot for a column is the first nonzero entry at or below the current row;
// free columns are listed in increasing index; the kernel basis has one vector
// per free column, with a 1 at that column and -RREF[r][free] at the pivot
// column of row r.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankdec/ffield.hpp"

namespace rankdec {

struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Elem> a;

  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  Elem& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

Mat mat_mul(const Field& f, const Mat& x, const Mat& y);
Mat mat_transpose(const Mat& x);

struct RrefResult {
  Mat r;
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

RrefResult mat_rref(const Field& f, Mat x);
std::size_t mat_rank(const Field& f, const Mat& x);

// Basis of {v : x v = 0}.
std::vector<std::vector<Elem>> mat_kernel(const Field& f, const Mat& x);

// Throws std::invalid_argument on a singular input.
Mat mat_inverse(const Field& f, const Mat& x);

// Particular solution of x v = b with all free variables zero; nullopt when
// inconsistent.
std::optional<std::vector<Elem>> mat_solve(const Field& f, const Mat& x,
                                           const std::vector<Elem>& b);

struct AffineSolution {
  std::vector<Elem> particular;
  std::vector<std::vector<Elem>> kernel;
};

// Full solution set of x v = b as particular + span(kernel); nullopt when
// inconsistent.
std::optional<AffineSolution> mat_solve_affine(const Field& f, const Mat& x,
                                               const std::vector<Elem>& b);

// Each entry of x becomes a column of m base-field digits: digit d of entry
// (i, j) lands in row i*m + d, column j.
Mat expand_over_base(const Field& f, const Mat& x);

// Rank of the expansion over F_q; this is the rank function of the rank metric.
std::size_t rank_over_base(const Field& f, const Mat& x);

}  // namespace rankdec
