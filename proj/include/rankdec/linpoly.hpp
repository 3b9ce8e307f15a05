// Linearized polynomials over F_{q^m}: p(x) = sum_i p_i x^{[i]}, [i] = q^i.
//
// Composition is the (non-commutative) ring product; x^{[0]} is the identity.
// The zero polynomial has an empty coefficient vector and q-degree -1.

#pragma once

#include <optional>
#include <vector>

#include "rankdec/ffield.hpp"

namespace rankdec {

struct LinPoly {
  std::vector<Elem> c;  // c[i] multiplies x^{[i]}; trailing zeros trimmed

  bool operator==(const LinPoly&) const = default;
};

inline int lp_qdeg(const LinPoly& p) { return int(p.c.size()) - 1; }
inline bool lp_is_zero(const LinPoly& p) { return p.c.empty(); }

LinPoly lp_trim(LinPoly p);
LinPoly lp_one();                 // x^{[0]}
LinPoly lp_monomial(Elem coeff, std::size_t i);

LinPoly lp_add(const Field& f, const LinPoly& a, const LinPoly& b);
LinPoly lp_sub(const Field& f, const LinPoly& a, const LinPoly& b);
LinPoly lp_scale(const Field& f, Elem c, const LinPoly& a);

Elem lp_eval(const Field& f, const LinPoly& p, Elem x);
std::vector<Elem> lp_eval_vec(const Field& f, const LinPoly& p, const std::vector<Elem>& xs);

// a after b: (a o b)(x) = a(b(x)); coefficient k is sum_{i+j=k} a_i b_j^{[i]}.
LinPoly lp_compose(const Field& f, const LinPoly& a, const LinPoly& b);

// Monic polynomial of minimal q-degree vanishing exactly on the F_q-span of
// the generators; q-degree equals the span dimension.
LinPoly min_subspace_poly(const Field& f, const std::vector<Elem>& gens);

// Unique polynomial of q-degree < n through (points[j], values[j]); the points
// must be F_q-independent.
LinPoly lp_lagrange(const Field& f, const std::vector<Elem>& points,
                    const std::vector<Elem>& values);

// Full q-reverse with respect to m: result_j = p_{(m-j) mod m}^{[j]}, indices
// of p taken in a length-m coefficient vector. Requires q-degree < m.
LinPoly lp_qreverse(const Field& f, const LinPoly& p);

// Reduction mod x^{[m]} - x (central): fold coefficient i onto i mod m.
LinPoly lp_mod_xqm(const Field& f, const LinPoly& p);

// Exact composition division: find quot with c = a o quot (left) or
// c = quot o b (right); nullopt when no exact quotient exists.
std::optional<LinPoly> lp_left_divide(const Field& f, const LinPoly& c, const LinPoly& a);
std::optional<LinPoly> lp_right_divide(const Field& f, const LinPoly& c, const LinPoly& b);

}  // namespace rankdec
