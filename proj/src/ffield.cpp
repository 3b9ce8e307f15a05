#include "rankdec/ffield.hpp"

#include <algorithm>

#include "rankdec/linalg.hpp"

namespace rankdec {
namespace {

// F_q polynomials as digit vectors, low degree first.
using Poly = std::vector<std::uint32_t>;

int pdeg(const Poly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (p[i]) return i;
  return -1;
}

Poly pmul(const Poly& a, const Poly& b, std::uint32_t q) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % q;
  }
  return r;
}

// r mod d, d monic.
void pmod(Poly& r, const Poly& d, std::uint32_t q) {
  int dd = pdeg(d);
  for (int i = pdeg(r); i >= dd && i >= 0; i = pdeg(r)) {
    std::uint32_t c = r[i];
    if (!c) continue;
    for (int j = 0; j <= dd; ++j) {
      std::uint32_t t = (q - (c * d[j]) % q) % q;
      r[i - dd + j] = (r[i - dd + j] + t) % q;
    }
  }
}

bool is_irreducible(const Poly& p, std::uint32_t q, std::uint32_t m) {
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::uint32_t d = 1; 2 * d <= m; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= q;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly div(d + 1, 0);
      std::uint64_t x = v;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = x % q;
        x /= q;
      }
      div[d] = 1;
      Poly r = p;
      pmod(r, div, q);
      if (pdeg(r) < 0) return false;
    }
  }
  return true;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

Field::Field(std::uint32_t q, std::uint32_t m, std::vector<std::uint32_t> modulus,
             bool enable_tables)
    : q_(q), m_(m) {
  if (!is_prime(q)) throw std::invalid_argument("field size base must be prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  order_ = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order_ *= q;
    if (order_ >= (std::uint64_t(1) << 31))
      throw std::invalid_argument("field order exceeds 2^31");
  }
  ord1_ = order_ - 1;

  if (!modulus.empty()) {
    if (modulus.size() != m + 1) throw std::invalid_argument("modulus degree must equal m");
    for (std::uint32_t c : modulus)
      if (c >= q) throw std::invalid_argument("modulus coefficient out of range");
    if (modulus[m] != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus, q, m)) throw std::invalid_argument("modulus is reducible");
    modulus_ = std::move(modulus);
  } else {
    // Lexicographically first monic irreducible, coefficients compared
    // low-to-high: c_0 is the most significant digit of the search index.
    std::uint64_t qpow = order_ / q;  // q^(m-1)
    for (std::uint64_t v = 0; v < order_; ++v) {
      Poly cand(m + 1, 0);
      cand[m] = 1;
      std::uint64_t x = v;
      std::uint64_t pw = qpow;
      for (std::uint32_t i = 0; i < m; ++i) {
        cand[i] = std::uint32_t((x / pw) % q);
        x %= pw;
        pw /= q;
      }
      if (is_irreducible(cand, q, m)) {
        modulus_ = std::move(cand);
        break;
      }
    }
    if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");
  }

  if (enable_tables && order_ <= (std::uint64_t(1) << 20)) build_tables();
  if (m_ > 1) base_ = std::make_unique<Field>(q_, 1);
}

std::uint32_t Field::digit(Elem a, std::uint32_t i) const {
  for (std::uint32_t j = 0; j < i; ++j) a /= q_;
  return a % q_;
}

Elem Field::mul_generic(Elem a, Elem b) const {
  Poly pa = to_digits(a), pb = to_digits(b);
  Poly r = pmul(pa, pb, q_);
  pmod(r, modulus_, q_);
  r.resize(m_, 0);
  return from_digits(r);
}

Elem Field::pow_u64(Elem a, std::uint64_t e) const {
  Elem r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

void Field::build_tables() {
  // Smallest packed element generating the multiplicative group.
  std::vector<std::uint64_t> primes;
  std::uint64_t n = ord1_;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (primes.empty() || primes.back() != d) primes.push_back(d);
      n /= d;
    }
  if (n > 1) primes.push_back(n);

  Elem gen = 0;
  for (Elem c = 1; c < order_; ++c) {
    bool ok = true;
    for (std::uint64_t p : primes) {
      Elem t = 1;
      std::uint64_t e = ord1_ / p;
      Elem base = c;
      while (e) {
        if (e & 1) t = mul_generic(t, base);
        base = mul_generic(base, base);
        e >>= 1;
      }
      if (t == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = c;
      break;
    }
  }
  if (gen == 0) throw std::logic_error("no group generator found");

  exp_.resize(ord1_);
  log_.assign(order_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < ord1_; ++i) {
    exp_[i] = cur;
    log_[cur] = std::uint32_t(i);
    cur = mul_generic(cur, gen);
  }
  tables_ = true;

  frob_.resize(order_);
  for (Elem a = 0; a < order_; ++a) frob_[a] = pow_u64(a, q_);
  tables_or_frob_ = true;
}

Elem Field::trace(Elem a) const {
  Elem t = 0, cur = a;
  for (std::uint32_t i = 0; i < m_; ++i) {
    t = add(t, cur);
    cur = frobenius(cur, 1);
  }
  return t;
}

std::vector<Elem> Field::polynomial_basis() const {
  std::vector<Elem> b(m_);
  Elem pw = 1;
  for (std::uint32_t i = 0; i < m_; ++i) {
    b[i] = pw;
    pw *= q_;
  }
  return b;
}

std::vector<Elem> Field::dual_basis(const std::vector<Elem>& basis) const {
  if (basis.size() != m_) throw std::invalid_argument("basis size must equal m");
  const Field& bf = base_field();
  Mat gram(m_, m_);
  for (std::uint32_t i = 0; i < m_; ++i)
    for (std::uint32_t j = 0; j < m_; ++j) gram.at(i, j) = trace(mul(basis[i], basis[j]));
  Mat ginv = mat_inverse(bf, gram);  // throws if the Gram matrix is singular
  std::vector<Elem> dual(m_, 0);
  for (std::uint32_t j = 0; j < m_; ++j) {
    Elem d = 0;
    for (std::uint32_t l = 0; l < m_; ++l) d = add(d, mul(ginv.at(l, j), basis[l]));
    dual[j] = d;
  }
  return dual;
}

BasisPair Field::find_normal_basis() const {
  const Field& bf = base_field();
  for (Elem beta = 1; beta < order_; ++beta) {
    std::vector<Elem> orbit(m_);
    Elem cur = beta;
    for (std::uint32_t i = 0; i < m_; ++i) {
      orbit[i] = cur;
      cur = frobenius(cur, 1);
    }
    Mat coords(m_, m_);
    for (std::uint32_t i = 0; i < m_; ++i)
      for (std::uint32_t j = 0; j < m_; ++j) coords.at(i, j) = digit(orbit[i], j);
    if (mat_rank(bf, coords) == m_) {
      BasisPair bp;
      bp.basis = orbit;
      bp.dual = dual_basis(orbit);
      bp.is_normal = true;
      return bp;
    }
  }
  throw std::logic_error("no normal basis found");
}

Elem Field::parse_elem(const std::string& token) const {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(token, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an element token: '" + token + "'");
  }
  if (pos != token.size()) throw std::invalid_argument("not an element token: '" + token + "'");
  if (v >= order_) throw std::invalid_argument("element out of range: '" + token + "'");
  return Elem(v);
}

std::string Field::format_elem(Elem a) const { return std::to_string(a); }

std::vector<std::uint32_t> Field::to_digits(Elem a) const {
  std::vector<std::uint32_t> d(m_);
  for (std::uint32_t i = 0; i < m_; ++i) {
    d[i] = a % q_;
    a /= q_;
  }
  return d;
}

Elem Field::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() > m_) throw std::invalid_argument("too many digits");
  Elem a = 0;
  std::uint32_t pw = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= q_) throw std::invalid_argument("digit out of range");
    a += d[i] * pw;
    pw *= q_;
  }
  return a;
}

}  // namespace rankdec
