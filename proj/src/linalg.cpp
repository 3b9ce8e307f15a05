#include "rankdec/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rankdec {

Mat mat_mul(const Field& f, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t l = 0; l < x.cols; ++l) {
      Elem v = x.at(i, l);
      if (!v) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r.at(i, j) = f.add(r.at(i, j), f.mul(v, y.at(l, j)));
    }
  return r;
}

Mat mat_transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

RrefResult mat_rref(const Field& f, Mat x) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < x.cols && r < x.rows; ++c) {
    std::size_t sel = x.rows;
    for (std::size_t i = r; i < x.rows; ++i)
      if (x.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel == x.rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < x.cols; ++j) std::swap(x.at(sel, j), x.at(r, j));
    Elem s = f.inv(x.at(r, c));
    for (std::size_t j = c; j < x.cols; ++j) x.at(r, j) = f.mul(x.at(r, j), s);
    for (std::size_t i = 0; i < x.rows; ++i) {
      if (i == r) continue;
      Elem v = x.at(i, c);
      if (!v) continue;
      for (std::size_t j = c; j < x.cols; ++j)
        x.at(i, j) = f.sub(x.at(i, j), f.mul(v, x.at(r, j)));
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  out.r = std::move(x);
  return out;
}

std::size_t mat_rank(const Field& f, const Mat& x) { return mat_rref(f, x).rank; }

std::vector<std::vector<Elem>> mat_kernel(const Field& f, const Mat& x) {
  RrefResult rr = mat_rref(f, x);
  std::vector<bool> is_pivot(x.cols, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (std::size_t cf = 0; cf < x.cols; ++cf) {
    if (is_pivot[cf]) continue;
    std::vector<Elem> v(x.cols, 0);
    v[cf] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[rr.pivot_cols[r]] = f.neg(rr.r.at(r, cf));
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat mat_inverse(const Field& f, const Mat& x) {
  if (x.rows != x.cols) throw std::invalid_argument("inverse of non-square matrix");
  std::size_t n = x.rows;
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, n + i) = 1;
  }
  RrefResult rr = mat_rref(f, aug);
  if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1)
    throw std::invalid_argument("singular matrix");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.r.at(i, n + j);
  return inv;
}

std::optional<AffineSolution> mat_solve_affine(const Field& f, const Mat& x,
                                               const std::vector<Elem>& b) {
  if (b.size() != x.rows) throw std::invalid_argument("rhs size mismatch");
  Mat aug(x.rows, x.cols + 1);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) aug.at(i, j) = x.at(i, j);
    aug.at(i, x.cols) = b[i];
  }
  RrefResult rr = mat_rref(f, aug);
  if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == x.cols) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(x.cols, 0);
  std::vector<bool> is_pivot(x.cols, false);
  for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
    is_pivot[rr.pivot_cols[r]] = true;
    sol.particular[rr.pivot_cols[r]] = rr.r.at(r, x.cols);
  }
  for (std::size_t cf = 0; cf < x.cols; ++cf) {
    if (is_pivot[cf]) continue;
    std::vector<Elem> v(x.cols, 0);
    v[cf] = 1;
    for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
      v[rr.pivot_cols[r]] = f.neg(rr.r.at(r, cf));
    sol.kernel.push_back(std::move(v));
  }
  return sol;
}

std::optional<std::vector<Elem>> mat_solve(const Field& f, const Mat& x,
                                           const std::vector<Elem>& b) {
  auto sol = mat_solve_affine(f, x, b);
  if (!sol) return std::nullopt;
  return std::move(sol->particular);
}

Mat expand_over_base(const Field& f, const Mat& x) {
  std::uint32_t m = f.m();
  Mat r(x.rows * m, x.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) {
      Elem v = x.at(i, j);
      for (std::uint32_t d = 0; d < m; ++d) {
        r.at(i * m + d, j) = v % f.q();
        v /= f.q();
      }
    }
  return r;
}

std::size_t rank_over_base(const Field& f, const Mat& x) {
  return mat_rank(f.base_field(), expand_over_base(f, x));
}

}  // namespace rankdec
