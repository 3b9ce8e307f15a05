#include "rankdec/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "rankdec/channel.hpp"
#include "rankdec/erasure_decoder.hpp"
#include "rankdec/reference.hpp"
#include "rankdec/rng.hpp"
#include "rankdec/stats.hpp"

namespace rankdec {

void ExperimentResult::add(const ExperimentResult& o) {
  trials += o.trials;
  successes += o.successes;
  failures += o.failures;
  wrong += o.wrong;
  overflow += o.overflow;
  fail_rank += o.fail_rank;
  fail_radius += o.fail_radius;
  list_items += o.list_items;
  list_outcomes += o.list_outcomes;
  rr_fail += o.rr_fail;
  sb_fail += o.sb_fail;
  predicate_disagree += o.predicate_disagree;
  if (t_hist.size() < o.t_hist.size()) t_hist.resize(o.t_hist.size(), 0);
  for (std::size_t i = 0; i < o.t_hist.size(); ++i) t_hist[i] += o.t_hist[i];
}

std::shared_ptr<const Field> make_field_from(const ExperimentConfig& cfg) {
  return std::make_shared<Field>(cfg.q, cfg.m, cfg.modulus);
}

InterleavedCode make_code_from(const ExperimentConfig& cfg) {
  return make_code(make_field_from(cfg), cfg.s, cfg.n, cfg.k);
}

namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (cfg.compare && cfg.channel != ChannelKind::FixedRank)
    throw std::invalid_argument("predicate comparison needs the fixed-rank channel");
}

// One trial; counters only, no timing. Success / failure / wrong / overflow
// partition the trials.
void run_one(const InterleavedCode& code, const ExperimentConfig& cfg, std::uint64_t trial,
             ExperimentResult& acc) {
  const Field& f = code.f();
  Rng rng = trial_stream(cfg.seed, trial);
  MessageTuple msg(code.s);
  for (std::uint32_t i = 0; i < code.s; ++i) {
    msg[i].c.resize(code.k[i]);
    for (Elem& c : msg[i].c) c = rng.elem(f);
  }
  WordMatrix cw = encode(code, msg);
  for (LinPoly& p : msg) p = lp_trim(std::move(p));

  std::uint32_t t = 0;
  DecodeOutcome out;
  if (cfg.channel == ChannelKind::Erasure) {
    ChannelDraw d = sample_erasure_scenario(code, cfg.rho, cfg.gamma, cfg.t, rng);
    t = d.t;
    WordMatrix r = word_add(code, cw, d.error);
    out = decode_error_erasure(code, d.info, r, cfg.mode, cfg.list_cap);
  } else {
    WordMatrix e;
    if (cfg.channel == ChannelKind::Qsc) {
      auto drawn = qsc_rank_channel(code, cfg.p_qsc, rng);
      e = std::move(drawn.first);
      t = drawn.second;
    } else {
      t = cfg.t;
      e = sample_rank_error(code, t, rng);
    }
    WordMatrix r = word_add(code, cw, e);
    out = decode(code, r, cfg.mode, cfg.list_cap);
    if (cfg.compare) {
      bool rr = rr_fails(code, r, t);
      bool sb = sb_fails(code, r, t);
      if (rr) acc.rr_fail++;
      if (sb) acc.sb_fail++;
      if (rr != sb) acc.predicate_disagree++;
    }
  }

  acc.trials++;
  if (t < acc.t_hist.size()) acc.t_hist[t]++;
  switch (out.kind) {
    case OutcomeKind::Unique:
      if (out.messages.size() == 1 && out.messages[0] == msg)
        acc.successes++;
      else
        acc.wrong++;
      break;
    case OutcomeKind::List: {
      acc.list_outcomes++;
      acc.list_items += out.messages.size();
      bool found = false;
      for (const MessageTuple& cand : out.messages)
        if (cand == msg) {
          found = true;
          break;
        }
      if (found)
        acc.successes++;
      else if (out.messages.empty())
        acc.failures++;
      else
        acc.wrong++;
      break;
    }
    case OutcomeKind::Failure:
      if (out.reason == FailureReason::ListOverflow) {
        acc.overflow++;
      } else {
        acc.failures++;
        if (out.reason == FailureReason::RankDeficient)
          acc.fail_rank++;
        else
          acc.fail_radius++;
      }
      break;
  }
}

}  // namespace

ExperimentResult run_experiment_serial(const ExperimentConfig& cfg) {
  validate(cfg);
  InterleavedCode code = make_code_from(cfg);
  ExperimentResult res;
  res.t_hist.assign(code.n + 1, 0);
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t i = 0; i < cfg.trials; ++i) run_one(code, cfg, i, res);
  res.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  InterleavedCode code = make_code_from(cfg);
  ExperimentResult res;
  res.t_hist.assign(code.n + 1, 0);
  auto start = std::chrono::steady_clock::now();
#ifdef _OPENMP
#pragma omp parallel num_threads(cfg.workers)
  {
    ExperimentResult local;
    local.t_hist.assign(code.n + 1, 0);
#pragma omp for schedule(static)
    for (long long i = 0; i < (long long)cfg.trials; ++i)
      run_one(code, cfg, std::uint64_t(i), local);
#pragma omp critical
    res.add(local);
  }
#else
  for (std::uint64_t i = 0; i < cfg.trials; ++i) run_one(code, cfg, i, res);
#endif
  res.elapsed_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

namespace {

bool tuple_less(const MessageTuple& a, const MessageTuple& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
    if (a[i].c != b[i].c) return a[i].c < b[i].c;
  return a.size() < b.size();
}

}  // namespace

OracleReport run_oracle_check(const OracleConfig& cfg) {
  auto field = std::make_shared<Field>(cfg.q, cfg.m, cfg.modulus);
  InterleavedCode code = make_code(field, cfg.s, cfg.n, cfg.k);
  std::uint64_t order = field->order();
  std::uint64_t codebook = 1;
  for (std::uint32_t i = 0; i < code.sum_k(); ++i) {
    if (codebook > cfg.max_codebook / order)
      throw std::invalid_argument("codebook too large for exhaustive check");
    codebook *= order;
  }
  if (codebook > cfg.max_codebook)
    throw std::invalid_argument("codebook too large for exhaustive check");

  std::vector<MessageTuple> messages;
  std::vector<WordMatrix> codewords;
  messages.reserve(codebook);
  codewords.reserve(codebook);
  std::vector<Elem> coef(code.sum_k(), 0);
  for (;;) {
    MessageTuple msg(code.s);
    std::size_t pos = 0;
    for (std::uint32_t i = 0; i < code.s; ++i) {
      msg[i].c.assign(coef.begin() + pos, coef.begin() + pos + code.k[i]);
      pos += code.k[i];
    }
    codewords.push_back(encode(code, msg));
    for (LinPoly& p : msg) p = lp_trim(std::move(p));
    messages.push_back(std::move(msg));
    std::size_t l = 0;
    for (; l < coef.size(); ++l) {
      if (++coef[l] < order) break;
      coef[l] = 0;
    }
    if (l == coef.size()) break;
  }

  std::uint32_t tau = radius_list(code);
  std::uint32_t t_max = std::min({tau + 1, code.n, code.s * field->m()});
  OracleReport rep;
  rep.t_counts.assign(t_max + 1, 0);
  for (std::uint64_t trial = 0; trial < cfg.trials; ++trial) {
    Rng rng = trial_stream(cfg.seed, trial);
    std::uint64_t idx = rng.below(codebook);
    std::uint32_t t = std::uint32_t(trial % (t_max + 1));
    WordMatrix e = sample_rank_error(code, t, rng);
    WordMatrix r = word_add(code, codewords[idx], e);
    rep.trials++;
    rep.t_counts[t]++;

    std::vector<MessageTuple> expect;
    for (std::uint64_t c = 0; c < codebook; ++c)
      if (rank_distance(code, r, codewords[c]) <= tau) expect.push_back(messages[c]);

    DecodeOutcome out = decode(code, r, DecodeMode::List, cfg.list_cap);
    if (out.kind != OutcomeKind::List) {
      rep.mismatches++;
      continue;
    }
    std::vector<MessageTuple> got = out.messages;
    std::sort(got.begin(), got.end(), tuple_less);
    std::sort(expect.begin(), expect.end(), tuple_less);
    if (got != expect) rep.mismatches++;
  }
  return rep;
}

namespace {

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_csv_header(std::ostream& os) {
  os << "trials,successes,failures,wrong,overflow,failure_rate,wilson_lo,wilson_hi,"
        "bound_lo,bound_alt\n";
}

void write_csv_row(std::ostream& os, const ExperimentResult& res, double bound_lo,
                   bool bound_lo_valid, double bound_alt) {
  Wilson w = wilson_interval(res.failures, res.trials);
  os << res.trials << ',' << res.successes << ',' << res.failures << ',' << res.wrong << ','
     << res.overflow << ',' << fmt_g(res.failure_rate()) << ',' << fmt_g(w.lo) << ','
     << fmt_g(w.hi) << ',';
  if (bound_lo_valid) os << fmt_g(bound_lo);
  os << ',' << fmt_g(bound_alt) << '\n';
}

}  // namespace rankdec
