#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdec/linalg.hpp"
#include "rankdec/rng.hpp"

using namespace rankdec;

namespace {

Mat from_rows(std::size_t rows, std::size_t cols, std::initializer_list<Elem> vals) {
  Mat m(rows, cols);
  std::size_t i = 0;
  for (Elem v : vals) m.a[i++] = v;
  return m;
}

Mat random_mat(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(rows, cols);
  for (Elem& v : m.a) v = rng.elem(f);
  return m;
}

std::vector<Elem> apply(const Field& f, const Mat& m, const std::vector<Elem>& v) {
  std::vector<Elem> r(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] = f.add(r[i], f.mul(m.at(i, j), v[j]));
  return r;
}

}  // namespace

TEST_CASE("known reduced form over F_3") {
  Field f(3, 1);
  Mat m = from_rows(2, 3, {1, 2, 1, 2, 1, 1});
  RrefResult rr = mat_rref(f, m);
  CHECK(rr.rank == 2);
  CHECK(rr.pivot_cols == std::vector<std::size_t>{0, 2});
  CHECK(rr.r.a == std::vector<Elem>{1, 2, 0, 0, 0, 1});
}

TEST_CASE("kernel basis convention: unit at the free column") {
  Field f(3, 1);
  Mat m = from_rows(2, 3, {1, 2, 1, 2, 1, 1});
  auto ker = mat_kernel(f, m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<Elem>{1, 1, 0});
  // Wide zero matrix: kernel is the standard basis in column order.
  auto full = mat_kernel(f, Mat(2, 3));
  REQUIRE(full.size() == 3);
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t j = 0; j < 3; ++j) CHECK(full[l][j] == (l == j ? 1u : 0u));
}

TEST_CASE("kernel vectors annihilate random matrices") {
  Field f(2, 3);
  Rng rng(123);
  for (int it = 0; it < 50; ++it) {
    Mat m = random_mat(f, 3, 5, rng);
    auto ker = mat_kernel(f, m);
    CHECK(ker.size() == 5 - mat_rank(f, m));
    for (const auto& v : ker) {
      auto img = apply(f, m, v);
      for (Elem x : img) CHECK(x == 0);
    }
  }
}

TEST_CASE("inverse round-trips and rejects singular input") {
  Field f(3, 2);
  Rng rng(7);
  for (int it = 0; it < 30; ++it) {
    Mat m = random_mat(f, 4, 4, rng);
    if (mat_rank(f, m) < 4) {
      CHECK_THROWS_AS(mat_inverse(f, m), std::invalid_argument);
      continue;
    }
    Mat inv = mat_inverse(f, m);
    Mat prod = mat_mul(f, m, inv);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(prod.at(i, j) == (i == j ? 1u : 0u));
  }
  CHECK_THROWS_AS(mat_inverse(f, Mat(2, 3)), std::invalid_argument);
}

TEST_CASE("affine solver returns particular plus kernel") {
  Field f(3, 1);
  Mat m = from_rows(2, 3, {1, 2, 1, 2, 1, 1});
  auto sol = mat_solve_affine(f, m, {1, 1});
  REQUIRE(sol.has_value());
  CHECK(sol->particular == std::vector<Elem>{0, 0, 1});
  CHECK(sol->kernel.size() == 1);
  CHECK(apply(f, m, sol->particular) == std::vector<Elem>{1, 1});

  Mat bad = from_rows(2, 2, {1, 1, 2, 2});
  CHECK(!mat_solve_affine(f, bad, {1, 1}).has_value());
  CHECK(!mat_solve(f, bad, {1, 1}).has_value());
  CHECK(mat_solve(f, m, {1, 1}) == std::vector<Elem>{0, 0, 1});
}

TEST_CASE("every affine solution satisfies the system") {
  Field f(2, 2);
  Rng rng(99);
  for (int it = 0; it < 60; ++it) {
    Mat m = random_mat(f, 3, 4, rng);
    std::vector<Elem> b(3);
    for (Elem& v : b) v = rng.elem(f);
    auto sol = mat_solve_affine(f, m, b);
    if (!sol) {
      // b outside the column span: verify by brute force over all 4^4 vectors.
      std::vector<Elem> v(4, 0);
      bool any = false;
      for (;;) {
        if (apply(f, m, v) == b) any = true;
        std::size_t l = 0;
        for (; l < 4; ++l) {
          if (++v[l] < f.order()) break;
          v[l] = 0;
        }
        if (l == 4) break;
      }
      CHECK(!any);
      continue;
    }
    CHECK(apply(f, m, sol->particular) == b);
    for (const auto& kv : sol->kernel) {
      std::vector<Elem> shifted = sol->particular;
      for (std::size_t j = 0; j < 4; ++j) shifted[j] = f.add(shifted[j], kv[j]);
      CHECK(apply(f, m, shifted) == b);
    }
    CHECK(sol->kernel.size() == 4 - mat_rank(f, m));
  }
}

TEST_CASE("expansion puts digit d of entry (i,j) at row i*m+d") {
  Field f(3, 2);
  Mat m = from_rows(1, 2, {7, 2});  // digits (1,2) and (2,0)
  Mat e = expand_over_base(f, m);
  CHECK(e.rows == 2);
  CHECK(e.cols == 2);
  CHECK(e.at(0, 0) == 1);
  CHECK(e.at(1, 0) == 2);
  CHECK(e.at(0, 1) == 2);
  CHECK(e.at(1, 1) == 0);
}

TEST_CASE("rank over the base field counts vanishing column combinations") {
  // q^(cols - rank) combinations of the columns are zero; exhaustive count.
  Field f(2, 3);
  Rng rng(2024);
  for (int it = 0; it < 40; ++it) {
    Mat m = random_mat(f, 2, 4, rng);
    std::size_t rank = rank_over_base(f, m);
    std::uint32_t zeros = 0;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      std::vector<Elem> acc(2, 0);
      for (std::size_t j = 0; j < 4; ++j)
        if (mask >> j & 1)
          for (std::size_t i = 0; i < 2; ++i) acc[i] = f.add(acc[i], m.at(i, j));
      if (acc == std::vector<Elem>{0, 0}) zeros++;
    }
    CHECK(zeros == std::uint32_t(1) << (4 - rank));
  }
}

TEST_CASE("rank over the base field with q = 3 coefficients") {
  Field f(3, 2);
  Rng rng(5);
  for (int it = 0; it < 20; ++it) {
    Mat m = random_mat(f, 2, 3, rng);
    std::size_t rank = rank_over_base(f, m);
    std::uint32_t zeros = 0;
    std::vector<Elem> c(3, 0);
    for (;;) {
      std::vector<Elem> acc(2, 0);
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 2; ++i) acc[i] = f.add(acc[i], f.mul(c[j], m.at(i, j)));
      if (acc == std::vector<Elem>{0, 0}) zeros++;
      std::size_t l = 0;
      for (; l < 3; ++l) {
        if (++c[l] < 3) break;
        c[l] = 0;
      }
      if (l == 3) break;
    }
    std::uint32_t expect = 1;
    for (std::size_t i = 0; i < 3 - rank; ++i) expect *= 3;
    CHECK(zeros == expect);
  }
}

TEST_CASE("product and transpose shapes and values") {
  Field f(2, 2);
  Mat x = from_rows(2, 3, {1, 2, 0, 3, 1, 2});
  Mat y = from_rows(3, 2, {2, 1, 1, 0, 0, 3});
  Mat p = mat_mul(f, x, y);
  REQUIRE(p.rows == 2);
  REQUIRE(p.cols == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Elem acc = 0;
      for (std::size_t l = 0; l < 3; ++l) acc = f.add(acc, f.mul(x.at(i, l), y.at(l, j)));
      CHECK(p.at(i, j) == acc);
    }
  Mat t = mat_transpose(x);
  CHECK(t.rows == 3);
  CHECK(t.cols == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(t.at(j, i) == x.at(i, j));
}
