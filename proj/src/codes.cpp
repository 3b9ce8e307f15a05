#include "rankdec/codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rankdec {

std::uint32_t InterleavedCode::sum_k() const {
  return std::accumulate(k.begin(), k.end(), std::uint32_t(0));
}
std::uint32_t InterleavedCode::max_k() const { return *std::max_element(k.begin(), k.end()); }
std::uint32_t InterleavedCode::min_k() const { return *std::min_element(k.begin(), k.end()); }
bool InterleavedCode::equal_k() const { return min_k() == max_k(); }

Mat qvandermonde(const Field& f, std::size_t rows, const std::vector<Elem>& points) {
  Mat r(rows, points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    Elem v = points[j];
    for (std::size_t i = 0; i < rows; ++i) {
      r.at(i, j) = v;
      v = f.frobenius(v, 1);
    }
  }
  return r;
}

namespace {

// h with sum_j g_j^{[-c]} h_j = 0 for c = 1..n-1. The coefficient matrix has
// rank n-1 (entrywise Frobenius maps it to a row-permuted Moore matrix), so
// the kernel is one-dimensional.
std::vector<Elem> solve_parity_roots(const Field& f, const std::vector<Elem>& g) {
  std::size_t n = g.size();
  Mat a(n - 1, n);
  for (std::size_t c = 1; c < n; ++c)
    for (std::size_t j = 0; j < n; ++j)
      a.at(c - 1, j) = f.frobenius(g[j], -std::int64_t(c));
  auto ker = mat_kernel(f, a);
  if (ker.size() != 1) throw std::logic_error("parity kernel is not one-dimensional");
  return ker[0];
}

}  // namespace

InterleavedCode make_code(std::shared_ptr<const Field> field, std::uint32_t s,
                          std::uint32_t n, std::vector<std::uint32_t> k,
                          std::vector<Elem> g) {
  if (!field) throw std::invalid_argument("null field");
  const Field& f = *field;
  if (s < 1) throw std::invalid_argument("need at least one elementary code");
  if (n < 1 || n > f.m()) throw std::invalid_argument("length must satisfy 1 <= n <= m");
  if (k.size() != s) throw std::invalid_argument("need one dimension per elementary code");
  for (std::uint32_t ki : k)
    if (ki < 1 || ki > n) throw std::invalid_argument("dimensions must satisfy 1 <= k_i <= n");

  InterleavedCode code;
  code.field = std::move(field);
  code.s = s;
  code.n = n;
  code.k = std::move(k);

  if (g.empty()) {
    if (n == f.m()) {
      code.nb = f.find_normal_basis();
      code.g = code.nb.dual;
      code.h = code.nb.basis;
      code.dual_normal = true;
      return code;
    }
    g.resize(n);
    std::vector<Elem> pb = f.polynomial_basis();
    std::copy(pb.begin(), pb.begin() + n, g.begin());
  }
  if (g.size() != n) throw std::invalid_argument("evaluation vector length must equal n");
  Mat grow(1, n);
  for (std::uint32_t j = 0; j < n; ++j) grow.at(0, j) = g[j];
  if (rank_over_base(f, grow) != n)
    throw std::invalid_argument("evaluation points are F_q-dependent");
  code.g = std::move(g);
  code.h = n > 1 ? solve_parity_roots(f, code.g) : std::vector<Elem>{1};
  return code;
}

WordMatrix encode(const InterleavedCode& code, const MessageTuple& msg) {
  const Field& f = code.f();
  if (msg.size() != code.s) throw std::invalid_argument("message tuple size mismatch");
  for (std::uint32_t i = 0; i < code.s; ++i)
    if (lp_qdeg(msg[i]) >= int(code.k[i]))
      throw std::invalid_argument("message q-degree exceeds dimension");
  WordMatrix w(code.s, code.n);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::vector<Elem> row = lp_eval_vec(f, msg[i], code.g);
    for (std::uint32_t j = 0; j < code.n; ++j) w.at(i, j) = row[j];
  }
  return w;
}

Mat parity_matrix(const InterleavedCode& code, std::uint32_t i) {
  const Field& f = code.f();
  if (i >= code.s) throw std::invalid_argument("elementary code index out of range");
  std::vector<Elem> hk(code.n);
  for (std::uint32_t j = 0; j < code.n; ++j) hk[j] = f.frobenius(code.h[j], code.k[i]);
  return qvandermonde(f, code.n - code.k[i], hk);
}

std::vector<std::vector<Elem>> syndromes(const InterleavedCode& code, const WordMatrix& r) {
  const Field& f = code.f();
  if (r.rows != code.s || r.cols != code.n) throw std::invalid_argument("word shape mismatch");
  std::vector<std::vector<Elem>> out(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    Mat h = parity_matrix(code, i);
    out[i].assign(h.rows, 0);
    for (std::size_t u = 0; u < h.rows; ++u) {
      Elem acc = 0;
      for (std::uint32_t j = 0; j < code.n; ++j)
        acc = f.add(acc, f.mul(r.at(i, j), h.at(u, j)));
      out[i][u] = acc;
    }
  }
  return out;
}

std::size_t word_rank(const InterleavedCode& code, const WordMatrix& x) {
  return rank_over_base(code.f(), x);
}

std::size_t rank_distance(const InterleavedCode& code, const WordMatrix& x,
                          const WordMatrix& y) {
  return word_rank(code, word_sub(code, x, y));
}

WordMatrix word_add(const InterleavedCode& code, const WordMatrix& x, const WordMatrix& y) {
  const Field& f = code.f();
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("word shape mismatch");
  WordMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = f.add(x.a[i], y.a[i]);
  return r;
}

WordMatrix word_sub(const InterleavedCode& code, const WordMatrix& x, const WordMatrix& y) {
  const Field& f = code.f();
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("word shape mismatch");
  WordMatrix r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = f.sub(x.a[i], y.a[i]);
  return r;
}

}  // namespace rankdec
