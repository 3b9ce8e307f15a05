#include "rankdec/linpoly.hpp"

#include <stdexcept>

namespace rankdec {

LinPoly lp_trim(LinPoly p) {
  while (!p.c.empty() && p.c.back() == 0) p.c.pop_back();
  return p;
}

LinPoly lp_one() { return LinPoly{{1}}; }

LinPoly lp_monomial(Elem coeff, std::size_t i) {
  if (coeff == 0) return {};
  LinPoly p;
  p.c.assign(i + 1, 0);
  p.c[i] = coeff;
  return p;
}

LinPoly lp_add(const Field& f, const LinPoly& a, const LinPoly& b) {
  LinPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Elem va = i < a.c.size() ? a.c[i] : 0;
    Elem vb = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = f.add(va, vb);
  }
  return lp_trim(std::move(r));
}

LinPoly lp_sub(const Field& f, const LinPoly& a, const LinPoly& b) {
  LinPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    Elem va = i < a.c.size() ? a.c[i] : 0;
    Elem vb = i < b.c.size() ? b.c[i] : 0;
    r.c[i] = f.sub(va, vb);
  }
  return lp_trim(std::move(r));
}

LinPoly lp_scale(const Field& f, Elem c, const LinPoly& a) {
  if (c == 0) return {};
  LinPoly r = a;
  for (Elem& v : r.c) v = f.mul(c, v);
  return lp_trim(std::move(r));
}

Elem lp_eval(const Field& f, const LinPoly& p, Elem x) {
  Elem acc = 0, pw = x;
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    if (p.c[i]) acc = f.add(acc, f.mul(p.c[i], pw));
    pw = f.frobenius(pw, 1);
  }
  return acc;
}

std::vector<Elem> lp_eval_vec(const Field& f, const LinPoly& p, const std::vector<Elem>& xs) {
  std::vector<Elem> r(xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) r[j] = lp_eval(f, p, xs[j]);
  return r;
}

LinPoly lp_compose(const Field& f, const LinPoly& a, const LinPoly& b) {
  if (a.c.empty() || b.c.empty()) return {};
  LinPoly r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      if (!b.c[j]) continue;
      Elem t = f.mul(a.c[i], f.frobenius(b.c[j], std::int64_t(i)));
      r.c[i + j] = f.add(r.c[i + j], t);
    }
  }
  return lp_trim(std::move(r));
}

LinPoly min_subspace_poly(const Field& f, const std::vector<Elem>& gens) {
  LinPoly p = lp_one();
  for (Elem v : gens) {
    Elem w = lp_eval(f, p, v);
    if (w == 0) continue;  // already in the span
    // (x^{[1]} - w^{q-1} x^{[0]}) o p
    Elem wq1 = f.pow_u64(w, f.q() - 1);
    LinPoly nxt;
    nxt.c.assign(p.c.size() + 1, 0);
    for (std::size_t i = 0; i < p.c.size(); ++i) {
      nxt.c[i + 1] = f.add(nxt.c[i + 1], f.frobenius(p.c[i], 1));
      nxt.c[i] = f.sub(nxt.c[i], f.mul(wq1, p.c[i]));
    }
    p = lp_trim(std::move(nxt));
  }
  return p;
}

LinPoly lp_lagrange(const Field& f, const std::vector<Elem>& points,
                    const std::vector<Elem>& values) {
  if (points.size() != values.size()) throw std::invalid_argument("point/value size mismatch");
  std::size_t n = points.size();
  // Independence check: the span polynomial must reach q-degree n.
  if (lp_qdeg(min_subspace_poly(f, points)) != int(n))
    throw std::invalid_argument("interpolation points are F_q-dependent");
  LinPoly acc;
  for (std::size_t i = 0; i < n; ++i) {
    if (values[i] == 0) continue;
    std::vector<Elem> others;
    others.reserve(n - 1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(points[j]);
    LinPoly li = min_subspace_poly(f, others);
    Elem denom = lp_eval(f, li, points[i]);
    acc = lp_add(f, acc, lp_scale(f, f.div(values[i], denom), li));
  }
  return acc;
}

LinPoly lp_qreverse(const Field& f, const LinPoly& p) {
  std::uint32_t m = f.m();
  if (p.c.size() > m) throw std::invalid_argument("q-reverse requires q-degree < m");
  LinPoly r;
  r.c.assign(m, 0);
  for (std::uint32_t j = 0; j < m; ++j) {
    std::uint32_t src = (m - j) % m;
    Elem v = src < p.c.size() ? p.c[src] : 0;
    r.c[j] = f.frobenius(v, j);
  }
  return lp_trim(std::move(r));
}

LinPoly lp_mod_xqm(const Field& f, const LinPoly& p) {
  std::uint32_t m = f.m();
  LinPoly r;
  r.c.assign(std::min<std::size_t>(p.c.size(), m), 0);
  for (std::size_t i = 0; i < p.c.size(); ++i)
    r.c[i % m] = f.add(r.c[i % m], p.c[i]);
  return lp_trim(std::move(r));
}

std::optional<LinPoly> lp_left_divide(const Field& f, const LinPoly& c, const LinPoly& a) {
  if (a.c.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (c.c.empty()) return LinPoly{};
  int da = lp_qdeg(a), dc = lp_qdeg(c);
  if (dc < da) return std::nullopt;
  LinPoly rem = c, quot;
  quot.c.assign(dc - da + 1, 0);
  for (int d = dc - da; d >= 0; --d) {
    Elem cur = std::size_t(da + d) < rem.c.size() ? rem.c[da + d] : 0;
    if (cur == 0) continue;
    Elem fd = f.frobenius(f.div(cur, a.c[da]), -std::int64_t(da));
    quot.c[d] = fd;
    rem = lp_sub(f, rem, lp_compose(f, a, lp_monomial(fd, d)));
  }
  if (!rem.c.empty()) return std::nullopt;
  return lp_trim(std::move(quot));
}

std::optional<LinPoly> lp_right_divide(const Field& f, const LinPoly& c, const LinPoly& b) {
  if (b.c.empty()) throw std::invalid_argument("division by the zero polynomial");
  if (c.c.empty()) return LinPoly{};
  int db = lp_qdeg(b), dc = lp_qdeg(c);
  if (dc < db) return std::nullopt;
  LinPoly rem = c, quot;
  quot.c.assign(dc - db + 1, 0);
  for (int d = dc - db; d >= 0; --d) {
    Elem cur = std::size_t(db + d) < rem.c.size() ? rem.c[db + d] : 0;
    if (cur == 0) continue;
    Elem fd = f.div(cur, f.frobenius(b.c[db], d));
    quot.c[d] = fd;
    rem = lp_sub(f, rem, lp_compose(f, lp_monomial(fd, d), b));
  }
  if (!rem.c.empty()) return std::nullopt;
  return lp_trim(std::move(quot));
}

}  // namespace rankdec
