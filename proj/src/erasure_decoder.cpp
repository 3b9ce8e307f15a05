#include "rankdec/erasure_decoder.hpp"

#include <stdexcept>

namespace rankdec {

ErasureContext build_context(const InterleavedCode& code, const ErasureInfo& info) {
  const Field& f = code.f();
  if (code.n != f.m()) throw std::invalid_argument("error-erasure decoding requires n = m");
  if (!code.dual_normal)
    throw std::invalid_argument("error-erasure decoding requires the default evaluation basis");
  std::vector<std::uint32_t> rho = info.rho;
  if (rho.empty()) rho.assign(code.s, 0);
  if (rho.size() != code.s) throw std::invalid_argument("need one rho per elementary code");
  std::uint32_t gamma = info.gamma;
  if (info.b_col.rows != gamma || (gamma > 0 && info.b_col.cols != code.n))
    throw std::invalid_argument("column side information shape mismatch");
  if (info.a_row.size() != rho.size()) throw std::invalid_argument("row side information missing");

  ErasureContext ctx;
  ctx.d.assign(gamma, 0);
  for (std::uint32_t l = 0; l < gamma; ++l) {
    Elem acc = 0;
    for (std::uint32_t j = 0; j < code.n; ++j) {
      Elem c = info.b_col.at(l, j);
      if (c >= f.q()) throw std::invalid_argument("column side information not over F_q");
      if (c) acc = f.add(acc, f.mul(c, code.h[j]));
    }
    ctx.d[l] = acc;
  }
  ctx.col_span_poly = min_subspace_poly(f, ctx.d);
  if (lp_qdeg(ctx.col_span_poly) != int(gamma))
    throw std::invalid_argument("degenerate column side information");

  ctx.row_span_poly.resize(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    if (info.a_row[i].size() != rho[i]) throw std::invalid_argument("row side information shape mismatch");
    ctx.row_span_poly[i] = min_subspace_poly(f, info.a_row[i]);
    if (lp_qdeg(ctx.row_span_poly[i]) != int(rho[i]))
      throw std::invalid_argument("degenerate row side information");
  }

  std::vector<std::uint32_t> aug_k(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    aug_k[i] = code.k[i] + rho[i] + gamma;
    if (aug_k[i] > code.n) throw std::invalid_argument("erasures exceed code capacity");
  }
  ctx.aug = code;
  ctx.aug.k = std::move(aug_k);

  LinPoly rev = lp_qreverse(f, ctx.col_span_poly);
  ctx.w = lp_mod_xqm(f, lp_compose(f, rev, lp_monomial(1, gamma)));
  if (lp_qdeg(ctx.w) != int(gamma) || ctx.w.c[0] != 1)
    throw std::logic_error("right factor has unexpected shape");
  return ctx;
}

WordMatrix modify_received(const InterleavedCode& code, const ErasureContext& ctx,
                           const WordMatrix& r) {
  const Field& f = code.f();
  if (r.rows != code.s || r.cols != code.n) throw std::invalid_argument("word shape mismatch");
  WordMatrix y(code.s, code.n);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    std::vector<Elem> row(code.n);
    for (std::uint32_t j = 0; j < code.n; ++j) row[j] = r.at(i, j);
    LinPoly interp = lp_lagrange(f, code.g, row);
    LinPoly t = lp_compose(f, interp, ctx.w);
    t = lp_mod_xqm(f, lp_compose(f, ctx.row_span_poly[i], t));
    for (std::uint32_t j = 0; j < code.n; ++j) y.at(i, j) = lp_eval(f, t, code.g[j]);
  }
  return y;
}

DecodeOutcome decode_error_erasure(const InterleavedCode& code, const ErasureInfo& info,
                                   const WordMatrix& r, DecodeMode mode,
                                   std::uint64_t list_cap) {
  const Field& f = code.f();
  ErasureContext ctx = build_context(code, info);
  WordMatrix y = modify_received(code, ctx, r);
  DecodeOutcome out = decode(ctx.aug, y, mode, list_cap);

  std::vector<MessageTuple> recovered;
  bool division_failed = false;
  for (const MessageTuple& aug_msg : out.messages) {
    MessageTuple msg(code.s);
    bool ok = true;
    for (std::uint32_t i = 0; i < code.s && ok; ++i) {
      auto mid = lp_left_divide(f, aug_msg[i], ctx.row_span_poly[i]);
      if (!mid) {
        ok = false;
        break;
      }
      auto fi = lp_right_divide(f, *mid, ctx.w);
      if (!fi || lp_qdeg(*fi) >= int(code.k[i])) {
        ok = false;
        break;
      }
      msg[i] = std::move(*fi);
    }
    if (ok)
      recovered.push_back(std::move(msg));
    else
      division_failed = true;
  }
  out.messages = std::move(recovered);
  if (out.kind == OutcomeKind::Unique && division_failed) {
    out.kind = OutcomeKind::Failure;
    out.reason = FailureReason::RadiusExceeded;
  }
  return out;
}

}  // namespace rankdec
