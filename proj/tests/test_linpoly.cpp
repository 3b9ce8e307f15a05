#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankdec/linalg.hpp"
#include "rankdec/linpoly.hpp"
#include "rankdec/rng.hpp"

using namespace rankdec;

namespace {

LinPoly random_poly(const Field& f, std::size_t terms, Rng& rng) {
  LinPoly p;
  p.c.resize(terms);
  for (Elem& v : p.c) v = rng.elem(f);
  return lp_trim(std::move(p));
}

// Term-by-term evaluation, independent of lp_eval's cumulative frobenius.
Elem eval_oracle(const Field& f, const LinPoly& p, Elem x) {
  Elem acc = 0;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    acc = f.add(acc, f.mul(p.c[i], f.frobenius(x, std::int64_t(i))));
  return acc;
}

}  // namespace

TEST_CASE("evaluation matches the term-by-term oracle and is F_q-linear") {
  Field f(3, 2);
  Rng rng(1);
  for (int it = 0; it < 30; ++it) {
    LinPoly p = random_poly(f, 4, rng);
    for (Elem x = 0; x < 9; ++x) CHECK(lp_eval(f, p, x) == eval_oracle(f, p, x));
    for (Elem x = 0; x < 9; ++x)
      for (Elem y = 0; y < 9; ++y)
        CHECK(lp_eval(f, p, f.add(x, y)) == f.add(lp_eval(f, p, x), lp_eval(f, p, y)));
    for (Elem a = 0; a < 3; ++a)
      for (Elem x = 0; x < 9; ++x)
        CHECK(lp_eval(f, p, f.mul(a, x)) == f.mul(a, lp_eval(f, p, x)));
  }
  CHECK(lp_eval(f, LinPoly{}, 5) == 0);
  CHECK(lp_eval(f, lp_one(), 5) == 5);
}

TEST_CASE("composition evaluates as a after b and is associative") {
  Field f(2, 4);
  Rng rng(2);
  for (int it = 0; it < 25; ++it) {
    LinPoly a = random_poly(f, 3, rng), b = random_poly(f, 3, rng),
            c = random_poly(f, 2, rng);
    LinPoly ab = lp_compose(f, a, b);
    for (Elem x = 0; x < 16; ++x) CHECK(lp_eval(f, ab, x) == lp_eval(f, a, lp_eval(f, b, x)));
    CHECK((lp_compose(f, lp_compose(f, a, b), c) == lp_compose(f, a, lp_compose(f, b, c))));
    CHECK((lp_compose(f, a, lp_one()) == a));
    CHECK((lp_compose(f, lp_one(), a) == a));
  }
}

TEST_CASE("composition does not commute") {
  Field f(2, 3);
  LinPoly a{{2, 1}};  // 2x + x^[1]
  LinPoly b{{0, 3}};  // 3 x^[1]
  CHECK((lp_compose(f, a, b) != lp_compose(f, b, a)));
}

TEST_CASE("minimal subspace polynomial vanishes exactly on the span") {
  Field f(2, 4);
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    std::vector<Elem> gens(2);
    for (Elem& g : gens) g = rng.elem(f);
    LinPoly p = min_subspace_poly(f, gens);
    // Span membership by brute force over F_q-combinations.
    std::vector<Elem> span;
    for (Elem c0 = 0; c0 < 2; ++c0)
      for (Elem c1 = 0; c1 < 2; ++c1)
        span.push_back(f.add(f.mul(c0, gens[0]), f.mul(c1, gens[1])));
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    CHECK((std::size_t(1) << lp_qdeg(p)) == span.size());  // q-degree = span dimension
    CHECK(p.c.back() == 1);                              // monic
    for (Elem x = 0; x < 16; ++x) {
      bool in_span = std::binary_search(span.begin(), span.end(), x);
      CHECK((lp_eval(f, p, x) == 0) == in_span);
    }
  }
  CHECK((min_subspace_poly(f, {}) == lp_one()));
  Field f2(2, 3);
  LinPoly unit = min_subspace_poly(f2, {1});
  CHECK(unit.c == std::vector<Elem>{1, 1});  // x^2 + x over F_2
}

TEST_CASE("dependent generators do not raise the subspace polynomial degree") {
  Field f(2, 4);
  LinPoly one_gen = min_subspace_poly(f, {5});
  LinPoly dup = min_subspace_poly(f, {5, 5, 0});
  CHECK((one_gen == dup));
}

TEST_CASE("interpolation through independent points round-trips") {
  Field f(2, 4);
  Rng rng(4);
  std::vector<Elem> pts = {1, 2, 4, 8};  // the polynomial basis, F_2-independent
  for (int it = 0; it < 25; ++it) {
    LinPoly p = random_poly(f, 4, rng);
    std::vector<Elem> vals = lp_eval_vec(f, p, pts);
    CHECK((lp_lagrange(f, pts, vals) == p));
  }
  // Prescribed values are hit even for a partial point set.
  std::vector<Elem> pts2 = {3, 7};
  std::vector<Elem> vals2 = {9, 11};
  LinPoly q = lp_lagrange(f, pts2, vals2);
  CHECK(lp_qdeg(q) < 2);
  CHECK(lp_eval(f, q, 3) == 9);
  CHECK(lp_eval(f, q, 7) == 11);
  CHECK_THROWS(lp_lagrange(f, {1, 2, 3}, {0, 0, 0}));  // 3 = 1 + 2, dependent
}

TEST_CASE("q-reverse is the trace adjoint") {
  // Tr(z * p(y)) = Tr(reverse(p)(z) * y) for all y, z.
  Field f(2, 4);
  Rng rng(5);
  for (int it = 0; it < 15; ++it) {
    LinPoly p = random_poly(f, 4, rng);
    LinPoly pr = lp_qreverse(f, p);
    for (Elem y = 0; y < 16; ++y)
      for (Elem z = 0; z < 16; ++z)
        CHECK(f.trace(f.mul(z, lp_eval(f, p, y))) ==
              f.trace(f.mul(lp_eval(f, pr, z), y)));
    CHECK((lp_mod_xqm(f, lp_qreverse(f, pr)) == lp_mod_xqm(f, p)));
  }
  CHECK_THROWS(lp_qreverse(f, random_poly(f, 6, rng)));  // q-degree >= m
}

TEST_CASE("reduction mod x^[m] - x preserves the evaluation map") {
  Field f(2, 3);
  Rng rng(6);
  for (int it = 0; it < 30; ++it) {
    LinPoly p = random_poly(f, 7, rng);
    LinPoly r = lp_mod_xqm(f, p);
    CHECK(lp_qdeg(r) < 3);
    for (Elem x = 0; x < 8; ++x) CHECK(lp_eval(f, r, x) == lp_eval(f, p, x));
  }
}

TEST_CASE("composition division recovers both factors exactly") {
  Field f(2, 4);
  Rng rng(7);
  for (int it = 0; it < 40; ++it) {
    LinPoly a = random_poly(f, 3, rng), b = random_poly(f, 3, rng);
    if (lp_is_zero(a) || lp_is_zero(b)) continue;
    LinPoly c = lp_compose(f, a, b);
    auto left = lp_left_divide(f, c, a);
    REQUIRE(left.has_value());
    CHECK((*left == b));
    auto right = lp_right_divide(f, c, b);
    REQUIRE(right.has_value());
    CHECK((*right == a));
    // Perturbing one coefficient breaks exactness (or changes the quotient).
    LinPoly bad = c;
    bad.c[0] = f.add(bad.c[0], 1);
    bad = lp_trim(std::move(bad));
    auto l2 = lp_left_divide(f, bad, a);
    auto r2 = lp_right_divide(f, bad, b);
    CHECK((!l2.has_value() || lp_compose(f, a, *l2) == bad));
    CHECK((!r2.has_value() || lp_compose(f, *r2, b) == bad));
    if (l2) CHECK((*l2 != b));
    if (r2) CHECK((*r2 != a));
  }
  CHECK_THROWS(lp_left_divide(f, lp_one(), LinPoly{}));
  CHECK_THROWS(lp_right_divide(f, lp_one(), LinPoly{}));
  CHECK((lp_left_divide(f, LinPoly{}, lp_one()) == LinPoly{}));
}

TEST_CASE("evaluation rows of a composition stay in the original row space") {
  // With A_u = a(g)^{[u]} for u < h and C_u = (b o a)(g)^{[u]} for
  // u < h - qdeg(b), stacking C under A does not raise the rank.
  Field f(2, 4);
  Rng rng(8);
  std::vector<Elem> g = {1, 2, 4, 8};
  for (int it = 0; it < 20; ++it) {
    LinPoly a = random_poly(f, 3, rng);
    LinPoly b = random_poly(f, 2, rng);
    if (lp_is_zero(a) || lp_is_zero(b)) continue;
    LinPoly c = lp_compose(f, b, a);
    std::size_t h = 3, hc = h - std::size_t(lp_qdeg(b));
    Mat stacked(h + hc, g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
      Elem va = lp_eval(f, a, g[j]);
      for (std::size_t u = 0; u < h; ++u) stacked.at(u, j) = f.frobenius(va, std::int64_t(u));
      Elem vc = lp_eval(f, c, g[j]);
      for (std::size_t u = 0; u < hc; ++u)
        stacked.at(h + u, j) = f.frobenius(vc, std::int64_t(u));
    }
    Mat top(h, g.size());
    for (std::size_t u = 0; u < h; ++u)
      for (std::size_t j = 0; j < g.size(); ++j) top.at(u, j) = stacked.at(u, j);
    CHECK(mat_rank(f, stacked) == mat_rank(f, top));
  }
}

TEST_CASE("scaling and addition behave coefficientwise") {
  Field f(3, 2);
  LinPoly a{{1, 2, 3}};
  LinPoly b{{4, 0, 0, 5}};
  LinPoly sum = lp_add(f, a, b);
  CHECK(sum.c == std::vector<Elem>{f.add(1, 4), 2, 3, 5});
  CHECK((lp_sub(f, sum, b) == a));
  LinPoly sc = lp_scale(f, 2, a);
  CHECK(sc.c == std::vector<Elem>{f.mul(2, 1), f.mul(2, 2), f.mul(2, 3)});
  CHECK(lp_is_zero(lp_scale(f, 0, a)));
  CHECK(lp_trim(LinPoly{{0, 1, 0, 0}}).c == std::vector<Elem>{0, 1});
  CHECK(lp_monomial(3, 2).c == std::vector<Elem>{0, 0, 3});
}
