// Extension fields F_{q^m} with packed-integer elements.
//
// An element is a 32-bit unsigned integer whose base-q digits are the
// coordinates over F_q in the polynomial basis {1, alpha, ..., alpha^{m-1}}:
// value = sum_i c_i q^i. The same integer (printed in decimal) is the external
// text form of the element. Digit 0 is the constant coordinate, so elements
// below q are exactly the base-field elements.

#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rankdec {

using Elem = std::uint32_t;

// A basis of F_{q^m} over F_q together with its trace-dual basis.
struct BasisPair {
  std::vector<Elem> basis;
  std::vector<Elem> dual;
  bool is_normal = false;
};

class Field {
 public:
  // Constructs F_{q^m}. q must be prime, m >= 1, q^m < 2^31.
  // modulus: coefficients c_0..c_m (low degree first) of a monic irreducible
  // degree-m polynomial over F_q; empty selects the lexicographically first
  // monic irreducible, coefficients compared low-to-high.
  // enable_tables: allow exp/log tables when q^m <= 2^20 (disable to exercise
  // the generic arithmetic path).
  Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus = {},
        bool enable_tables = true);

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t q() const { return q_; }
  std::uint32_t m() const { return m_; }
  std::uint64_t order() const { return order_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  bool uses_tables() const { return tables_; }

  // The prime field F_q with the same element encoding (itself when m == 1).
  const Field& base_field() const { return base_ ? *base_ : *this; }

  bool valid(Elem a) const { return a < order_; }
  bool is_base(Elem a) const { return a < q_; }
  std::uint32_t digit(Elem a, std::uint32_t i) const;

  Elem add(Elem a, Elem b) const {
    if (q_ == 2) return a ^ b;
    Elem r = 0;
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t d = (a % q_) + (b % q_);
      if (d >= q_) d -= q_;
      r += d * pw;
      a /= q_;
      b /= q_;
      pw *= q_;
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (q_ == 2) return a;
    Elem r = 0;
    std::uint32_t pw = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t d = a % q_;
      r += (d ? q_ - d : 0) * pw;
      a /= q_;
      pw *= q_;
    }
    return r;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (tables_) {
      if (a == 0 || b == 0) return 0;
      std::uint64_t s = std::uint64_t(log_[a]) + log_[b];
      if (s >= ord1_) s -= ord1_;
      return exp_[s];
    }
    return mul_generic(a, b);
  }

  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (tables_) {
      std::uint64_t l = log_[a];
      return exp_[l == 0 ? 0 : ord1_ - l];
    }
    return pow_u64(a, order_ - 2);
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow_u64(Elem a, std::uint64_t e) const;

  // a^(q^e); e may be negative, interpreted mod m.
  Elem frobenius(Elem a, std::int64_t e) const {
    std::int64_t r = e % std::int64_t(m_);
    if (r < 0) r += m_;
    if (tables_or_frob_) {
      for (std::int64_t i = 0; i < r; ++i) a = frob_[a];
      return a;
    }
    for (std::int64_t i = 0; i < r; ++i) a = pow_u64(a, q_);
    return a;
  }

  // Tr(a) = sum_{i=0}^{m-1} a^(q^i); always a base-field element.
  Elem trace(Elem a) const;

  // {1, alpha, ..., alpha^{m-1}}, i.e. packed {1, q, q^2, ...}.
  std::vector<Elem> polynomial_basis() const;

  // The trace-dual of an arbitrary basis (Gram-matrix inversion over F_q).
  std::vector<Elem> dual_basis(const std::vector<Elem>& basis) const;

  // First element in packed order whose Frobenius orbit is a basis, with its
  // dual orbit. The dual of a normal basis is again normal.
  BasisPair find_normal_basis() const;

  Elem parse_elem(const std::string& token) const;
  std::string format_elem(Elem a) const;

  std::vector<std::uint32_t> to_digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

 private:
  Elem mul_generic(Elem a, Elem b) const;
  void build_tables();

  std::uint32_t q_ = 0;
  std::uint32_t m_ = 0;
  std::uint64_t order_ = 0;
  std::uint64_t ord1_ = 0;  // order - 1
  std::vector<std::uint32_t> modulus_;
  bool tables_ = false;
  bool tables_or_frob_ = false;
  std::vector<Elem> exp_;   // exp_[i] = gen^i, i in [0, order-2]
  std::vector<std::uint32_t> log_;
  std::vector<Elem> frob_;  // one Frobenius step
  std::unique_ptr<Field> base_;
};

}  // namespace rankdec
