#include "rankdec/interp_decoder.hpp"

#include <stdexcept>

namespace rankdec {

std::uint32_t radius_list(const InterleavedCode& code) {
  std::uint32_t s = code.s;
  std::uint32_t bound = s * code.n - code.sum_k() + s;  // tau*(s+1) must stay below this
  return (bound - 1) / (s + 1);
}

std::uint32_t radius_unique(const InterleavedCode& code) {
  return (code.s * code.n - code.sum_k()) / (code.s + 1);
}

namespace {

std::vector<std::uint32_t> block_widths(const InterleavedCode& code, std::uint32_t tau) {
  std::vector<std::uint32_t> w(code.s + 1);
  if (tau >= code.n) throw std::invalid_argument("radius leaves no interpolation degrees");
  w[0] = code.n - tau;
  for (std::uint32_t i = 0; i < code.s; ++i) {
    if (code.n < tau + code.k[i]) throw std::invalid_argument("radius leaves an empty block");
    w[i + 1] = code.n - tau - code.k[i] + 1;
  }
  return w;
}

}  // namespace

Mat build_interp_matrix(const InterleavedCode& code, const WordMatrix& r, std::uint32_t tau) {
  const Field& f = code.f();
  if (r.rows != code.s || r.cols != code.n) throw std::invalid_argument("word shape mismatch");
  std::vector<std::uint32_t> w = block_widths(code, tau);
  std::uint32_t total = 0;
  for (std::uint32_t wi : w) total += wi;
  Mat m(code.n, total);
  for (std::uint32_t j = 0; j < code.n; ++j) {
    std::uint32_t col = 0;
    Elem v = code.g[j];
    for (std::uint32_t u = 0; u < w[0]; ++u) {
      m.at(j, col++) = v;
      v = f.frobenius(v, 1);
    }
    for (std::uint32_t i = 0; i < code.s; ++i) {
      v = r.at(i, j);
      for (std::uint32_t u = 0; u < w[i + 1]; ++u) {
        m.at(j, col++) = v;
        v = f.frobenius(v, 1);
      }
    }
  }
  return m;
}

InterpSolution interpolate(const InterleavedCode& code, const WordMatrix& r, std::uint32_t tau) {
  InterpSolution sol;
  sol.tau = tau;
  sol.n = code.n;
  sol.s = code.s;
  sol.width = block_widths(code, tau);
  sol.offset.assign(code.s + 2, 0);
  for (std::uint32_t i = 0; i <= code.s; ++i) sol.offset[i + 1] = sol.offset[i] + sol.width[i];
  sol.basis = mat_kernel(code.f(), build_interp_matrix(code, r, tau));
  return sol;
}

RootSystem build_rootfind_system(const InterleavedCode& code, const InterpSolution& sol) {
  const Field& f = code.f();
  std::uint32_t nt = code.n - sol.tau;
  std::size_t di = sol.dim();
  RootSystem sys;
  for (std::uint32_t b = 0; b < code.max_k(); ++b)
    for (std::uint32_t i = 1; i <= code.s; ++i)
      if (b < code.k[i - 1]) sys.cols.emplace_back(i, b);
  sys.a = Mat(std::size_t(nt) * di, sys.cols.size());
  sys.rhs.assign(sys.a.rows, 0);
  for (std::uint32_t j = 0; j < nt; ++j)
    for (std::size_t h = 0; h < di; ++h) {
      std::size_t row = std::size_t(j) * di + h;
      sys.rhs[row] = f.neg(f.frobenius(sol.q(h, 0, j), -std::int64_t(j)));
      for (std::size_t c = 0; c < sys.cols.size(); ++c) {
        auto [i, b] = sys.cols[c];
        if (b > j) continue;
        Elem qv = sol.q(h, i, j - b);
        if (qv) sys.a.at(row, c) = f.frobenius(qv, -std::int64_t(j));
      }
    }
  return sys;
}

namespace {

MessageTuple unknowns_to_messages(const Field& f, const InterleavedCode& code,
                                  const RootSystem& sys, const std::vector<Elem>& z) {
  MessageTuple msg(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) msg[i].c.assign(code.k[i], 0);
  for (std::size_t c = 0; c < sys.cols.size(); ++c) {
    auto [i, b] = sys.cols[c];
    msg[i - 1].c[b] = f.frobenius(z[c], b);
  }
  for (LinPoly& p : msg) p = lp_trim(std::move(p));
  return msg;
}

}  // namespace

DecodeOutcome root_find(const InterleavedCode& code, const WordMatrix& r,
                        const InterpSolution& sol, DecodeMode mode, std::uint64_t list_cap) {
  const Field& f = code.f();
  DecodeOutcome out;
  out.tau = sol.tau;
  out.interp_dim = sol.dim();
  if (sol.dim() == 0) {
    out.kind = OutcomeKind::Failure;
    out.reason = FailureReason::RankDeficient;
    return out;
  }
  RootSystem sys = build_rootfind_system(code, sol);
  std::size_t cols = sys.cols.size();
  std::size_t di = sol.dim();

  auto within_radius = [&](const MessageTuple& msg) {
    return rank_distance(code, r, encode(code, msg)) <= sol.tau;
  };

  if (mode == DecodeMode::Unique) {
    Mat q0(di, code.s);
    for (std::size_t h = 0; h < di; ++h)
      for (std::uint32_t i = 1; i <= code.s; ++i) q0.at(h, i - 1) = sol.q(h, i, 0);
    if (mat_rank(f, q0) == code.s) {
      // Block forward substitution: at step b the coefficient matrix is the
      // leading block under Frobenius [-b], restricted to codes with k_i > b;
      // a column subset of a full-column-rank matrix, so still solvable.
      out.used_recursive = true;
      out.root_rank = cols;
      std::vector<Elem> z(cols, 0);
      for (std::uint32_t b = 0; b < code.max_k(); ++b) {
        std::vector<std::size_t> active;
        for (std::size_t c = 0; c < cols; ++c)
          if (sys.cols[c].second == b) active.push_back(c);
        Mat mb(di, active.size());
        std::vector<Elem> rhs_b(di, 0);
        for (std::size_t h = 0; h < di; ++h) {
          std::size_t row = std::size_t(b) * di + h;
          Elem acc = sys.rhs[row];
          for (std::size_t c = 0; c < cols; ++c) {
            if (sys.cols[c].second >= b) continue;
            Elem av = sys.a.at(row, c);
            if (av && z[c]) acc = f.sub(acc, f.mul(av, z[c]));
          }
          rhs_b[h] = acc;
          for (std::size_t ai = 0; ai < active.size(); ++ai)
            mb.at(h, ai) = sys.a.at(row, active[ai]);
        }
        auto zb = mat_solve(f, mb, rhs_b);
        if (!zb) {
          out.kind = OutcomeKind::Failure;
          out.reason = FailureReason::RadiusExceeded;
          return out;
        }
        for (std::size_t ai = 0; ai < active.size(); ++ai) z[active[ai]] = (*zb)[ai];
      }
      MessageTuple msg = unknowns_to_messages(f, code, sys, z);
      if (!within_radius(msg)) {
        out.kind = OutcomeKind::Failure;
        out.reason = FailureReason::RadiusExceeded;
        return out;
      }
      out.kind = OutcomeKind::Unique;
      out.messages.push_back(std::move(msg));
      return out;
    }
    auto aff = mat_solve_affine(f, sys.a, sys.rhs);
    if (!aff) {
      out.root_rank = mat_rank(f, sys.a);
      out.kind = OutcomeKind::Failure;
      out.reason = FailureReason::RadiusExceeded;
      return out;
    }
    out.root_rank = cols - aff->kernel.size();
    if (!aff->kernel.empty()) {
      out.kind = OutcomeKind::Failure;
      out.reason = FailureReason::RankDeficient;
      return out;
    }
    MessageTuple msg = unknowns_to_messages(f, code, sys, aff->particular);
    if (!within_radius(msg)) {
      out.kind = OutcomeKind::Failure;
      out.reason = FailureReason::RadiusExceeded;
      return out;
    }
    out.kind = OutcomeKind::Unique;
    out.messages.push_back(std::move(msg));
    return out;
  }

  auto aff = mat_solve_affine(f, sys.a, sys.rhs);
  if (!aff) {
    out.root_rank = mat_rank(f, sys.a);
    out.kind = OutcomeKind::List;  // no interpolation root at all: empty list
    return out;
  }
  out.root_rank = cols - aff->kernel.size();
  std::size_t dim = aff->kernel.size();
  out.list_space_dim = dim;
  std::uint64_t count = 1;
  bool over = false;
  for (std::size_t l = 0; l < dim; ++l) {
    if (count > list_cap / f.order()) {
      over = true;
      break;
    }
    count *= f.order();
  }
  if (over || count > list_cap) {
    out.kind = OutcomeKind::Failure;
    out.reason = FailureReason::ListOverflow;
    return out;
  }
  std::vector<Elem> coef(dim, 0);
  std::vector<Elem> z(cols);
  for (;;) {
    z = aff->particular;
    for (std::size_t l = 0; l < dim; ++l) {
      if (!coef[l]) continue;
      for (std::size_t c = 0; c < cols; ++c)
        if (aff->kernel[l][c]) z[c] = f.add(z[c], f.mul(coef[l], aff->kernel[l][c]));
    }
    MessageTuple msg = unknowns_to_messages(f, code, sys, z);
    if (within_radius(msg)) out.messages.push_back(std::move(msg));
    std::size_t l = 0;
    for (; l < dim; ++l) {
      if (++coef[l] < f.order()) break;
      coef[l] = 0;
    }
    if (l == dim) break;
  }
  out.kind = OutcomeKind::List;
  return out;
}

DecodeOutcome decode(const InterleavedCode& code, const WordMatrix& r, DecodeMode mode,
                     std::uint64_t list_cap) {
  std::uint32_t tau = mode == DecodeMode::Unique ? radius_unique(code) : radius_list(code);
  InterpSolution sol = interpolate(code, r, tau);
  return root_find(code, r, sol, mode, list_cap);
}

}  // namespace rankdec
