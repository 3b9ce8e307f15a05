// Command-line front end: encode, decode, Monte-Carlo simulation, analytic
// bounds, exhaustive list-decoder checks, and per-trial predicate checks.
//
// Exit codes: 0 success, 1 bad configuration or I/O, 2 a check found a
// violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rankdec/channel.hpp"
#include "rankdec/erasure_decoder.hpp"
#include "rankdec/io.hpp"
#include "rankdec/reference.hpp"
#include "rankdec/runner.hpp"
#include "rankdec/stats.hpp"

using namespace rankdec;

namespace {

struct CodeOpts {
  std::uint32_t q = 2, m = 7, n = 7, s = 2;
  std::vector<std::uint32_t> k{2, 2};
  std::uint64_t modulus = 0;  // packed base-q digits c_0..c_m; 0 means default
};

void add_code_options(CLI::App* cmd, CodeOpts& c) {
  cmd->add_option("--q", c.q, "base field size, prime")->capture_default_str();
  cmd->add_option("--m", c.m, "extension degree")->capture_default_str();
  cmd->add_option("--n", c.n, "code length")->capture_default_str();
  cmd->add_option("--s", c.s, "interleaving depth")->capture_default_str();
  cmd->add_option("--k", c.k, "dimensions k_1,..,k_s")->delimiter(',')->capture_default_str();
  cmd->add_option("--modulus", c.modulus,
                  "irreducible modulus as a packed base-q integer (digit i = coefficient of "
                  "x^i); default is the smallest such polynomial");
}

std::vector<std::uint32_t> modulus_digits(const CodeOpts& c) {
  if (!c.modulus) return {};
  std::vector<std::uint32_t> d(c.m + 1);
  std::uint64_t v = c.modulus;
  for (std::uint32_t i = 0; i <= c.m; ++i) {
    d[i] = std::uint32_t(v % c.q);
    v /= c.q;
  }
  if (v) throw std::invalid_argument("modulus degree exceeds m");
  return d;
}

ExperimentConfig base_config(const CodeOpts& c) {
  ExperimentConfig cfg;
  cfg.q = c.q;
  cfg.m = c.m;
  cfg.n = c.n;
  cfg.s = c.s;
  cfg.k = c.k;
  cfg.modulus = modulus_digits(c);
  return cfg;
}

DecodeMode parse_mode(const std::string& s) {
  return s == "list" ? DecodeMode::List : DecodeMode::Unique;
}

struct RowBounds {
  double lo = 0.0;
  bool lo_valid = false;
  double alt = 0.0;
};

RowBounds row_bounds(const InterleavedCode& code, const ExperimentConfig& cfg) {
  if (cfg.channel == ChannelKind::Qsc) {
    std::uint32_t tau = radius_unique(code);
    double tail = binom_tail_gt(code.n, cfg.p_qsc, tau);
    double alt = tail + bounds(code, tau).p_alt;
    return {tail, true, alt < 1.0 ? alt : 1.0};
  }
  if (cfg.channel == ChannelKind::Erasure) {
    std::vector<std::uint32_t> kk(code.s);
    for (std::uint32_t i = 0; i < code.s; ++i)
      kk[i] = code.k[i] + (cfg.rho.empty() ? 0 : cfg.rho[i]) + cfg.gamma;
    InterleavedCode aug = make_code(code.field, code.s, code.n, kk);
    BoundsReport b = bounds(aug, cfg.t);
    return {b.p_lo, b.p_lo_valid, b.p_alt};
  }
  BoundsReport b = bounds(code, cfg.t);
  return {b.p_lo, b.p_lo_valid, b.p_alt};
}

std::string channel_label(const ExperimentConfig& cfg) {
  std::ostringstream os;
  if (cfg.channel == ChannelKind::Qsc) {
    os << "p=" << cfg.p_qsc;
  } else {
    os << "t=" << cfg.t;
    if (cfg.channel == ChannelKind::Erasure) {
      os << " rho=";
      for (std::size_t i = 0; i < cfg.rho.size(); ++i) os << (i ? "," : "") << cfg.rho[i];
      if (cfg.rho.empty()) os << "0";
      os << " gamma=" << cfg.gamma;
    }
  }
  return os.str();
}

int cmd_encode(const CodeOpts& copts, const std::string& in, const std::string& out) {
  ExperimentConfig cfg = base_config(copts);
  InterleavedCode code = make_code_from(cfg);
  std::ifstream fin;
  std::istream* is = &std::cin;
  if (!in.empty()) {
    fin.open(in);
    if (!fin) throw std::invalid_argument("cannot open " + in);
    is = &fin;
  }
  MessageTuple msg = read_message_file(*is, code);
  std::ofstream fout;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    fout.open(out);
    if (!fout) throw std::invalid_argument("cannot open " + out);
    os = &fout;
  }
  write_word(*os, code, encode(code, msg));
  return 0;
}

int cmd_decode(const CodeOpts& copts, const std::string& in, const std::string& out,
               const std::string& erasures, const std::string& mode, std::uint64_t cap) {
  ExperimentConfig cfg = base_config(copts);
  InterleavedCode code = make_code_from(cfg);
  std::ifstream fin;
  std::istream* is = &std::cin;
  if (!in.empty()) {
    fin.open(in);
    if (!fin) throw std::invalid_argument("cannot open " + in);
    is = &fin;
  }
  WordMatrix r = read_word(*is, code);
  DecodeOutcome outc;
  if (!erasures.empty()) {
    std::ifstream ein(erasures);
    if (!ein) throw std::invalid_argument("cannot open " + erasures);
    ErasureInfo info = read_erasure_file(ein, code);
    outc = decode_error_erasure(code, info, r, parse_mode(mode), cap);
  } else {
    outc = decode(code, r, parse_mode(mode), cap);
  }
  std::ofstream fout;
  std::ostream* os = &std::cout;
  if (!out.empty()) {
    fout.open(out);
    if (!fout) throw std::invalid_argument("cannot open " + out);
    os = &fout;
  }
  write_outcome(*os, code, outc);
  return 0;
}

int cmd_simulate(const CodeOpts& copts, std::vector<std::uint32_t> t_list,
                 std::vector<double> p_list, std::vector<std::uint32_t> rho,
                 std::uint32_t gamma, bool with_erasures, const std::string& mode,
                 std::uint64_t cap, std::uint64_t trials, std::uint64_t seed, int workers,
                 bool compare, bool serial, const std::string& csv) {
  if (!p_list.empty() && (!t_list.empty() || with_erasures))
    throw std::invalid_argument("--p-qsc excludes --t, --rho and --gamma");
  ExperimentConfig base = base_config(copts);
  base.mode = parse_mode(mode);
  base.list_cap = cap;
  base.trials = trials;
  base.seed = seed;
  base.workers = workers;
  base.compare = compare;

  std::vector<ExperimentConfig> sweep;
  if (!p_list.empty()) {
    base.channel = ChannelKind::Qsc;
    for (double p : p_list) {
      base.p_qsc = p;
      sweep.push_back(base);
    }
  } else {
    base.channel = with_erasures ? ChannelKind::Erasure : ChannelKind::FixedRank;
    base.rho = rho;
    base.gamma = gamma;
    InterleavedCode probe = make_code_from(base);
    if (t_list.empty()) t_list.push_back(radius_unique(probe));
    for (std::uint32_t t : t_list) {
      base.t = t;
      sweep.push_back(base);
    }
  }

  std::ofstream csv_file;
  std::ostream* csv_os = nullptr;
  if (!csv.empty()) {
    if (csv == "-") {
      csv_os = &std::cout;
    } else {
      csv_file.open(csv);
      if (!csv_file) throw std::invalid_argument("cannot open " + csv);
      csv_os = &csv_file;
    }
    write_csv_header(*csv_os);
  }

  for (const ExperimentConfig& cfg : sweep) {
    InterleavedCode code = make_code_from(cfg);
    ExperimentResult res = serial ? run_experiment_serial(cfg) : run_experiment(cfg);
    RowBounds rb = row_bounds(code, cfg);
    Wilson w = wilson_interval(res.failures, res.trials);
    std::cout << channel_label(cfg) << " trials=" << res.trials
              << " failures=" << res.failures << " wrong=" << res.wrong
              << " overflow=" << res.overflow << " rate=" << res.failure_rate()
              << " wilson=[" << w.lo << "," << w.hi << "]";
    if (rb.lo_valid) std::cout << " bound_lo=" << rb.lo;
    std::cout << " bound_alt=" << rb.alt;
    if (cfg.mode == DecodeMode::List && res.list_outcomes)
      std::cout << " avg_list=" << double(res.list_items) / double(res.list_outcomes);
    if (cfg.compare)
      std::cout << " rr_fail=" << res.rr_fail << " sb_fail=" << res.sb_fail
                << " disagree=" << res.predicate_disagree;
    std::cout << " elapsed=" << res.elapsed_sec << "s\n";
    if (csv_os) write_csv_row(*csv_os, res, rb.lo, rb.lo_valid, rb.alt);
  }
  return 0;
}

int cmd_bounds(const CodeOpts& copts, std::int64_t t_opt) {
  ExperimentConfig cfg = base_config(copts);
  InterleavedCode code = make_code_from(cfg);
  std::uint32_t t = t_opt < 0 ? radius_unique(code) : std::uint32_t(t_opt);
  BoundsReport b = bounds(code, t);
  std::cout << "radius_unique=" << b.tau_u << " radius_list=" << b.tau_list << " t=" << t
            << "\n";
  std::cout << "received_criterion_bound=";
  if (b.p_lo_valid)
    std::cout << b.p_lo;
  else
    std::cout << "n/a (needs t >= s)";
  std::cout << "\nsyndrome_criterion_bound=";
  if (b.p_sb_valid)
    std::cout << b.p_sb;
  else
    std::cout << "n/a (needs s <= radius_unique)";
  std::cout << "\nkernel_bound=" << b.p_alt << "\navg_list_bound=" << b.avg_list
            << "\navg_list_excess=" << b.avg_list_excess << "\n";
  return 0;
}

int cmd_oracle(const CodeOpts& copts, std::uint64_t trials, std::uint64_t seed,
               std::uint64_t cap) {
  OracleConfig cfg;
  cfg.q = copts.q;
  cfg.m = copts.m;
  cfg.n = copts.n;
  cfg.s = copts.s;
  cfg.k = copts.k;
  cfg.modulus = modulus_digits(copts);
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.list_cap = cap;
  OracleReport rep = run_oracle_check(cfg);
  std::cout << "trials=" << rep.trials << " mismatches=" << rep.mismatches << " t_counts=";
  for (std::size_t i = 0; i < rep.t_counts.size(); ++i)
    std::cout << (i ? "," : "") << rep.t_counts[i];
  std::cout << "\n";
  return rep.mismatches ? 2 : 0;
}

int cmd_lemma(const CodeOpts& copts, std::int64_t t_opt, std::uint64_t trials,
              std::uint64_t seed) {
  ExperimentConfig cfg = base_config(copts);
  InterleavedCode code = make_code_from(cfg);
  const Field& f = code.f();
  std::uint32_t t = t_opt < 0 ? radius_unique(code) : std::uint32_t(t_opt);
  bool assertable = code.equal_k() && t <= radius_unique(code);

  std::uint64_t kernel_def = 0, q0bar_def = 0, rr_cnt = 0, sb_cnt = 0;
  std::uint64_t conv_q0bar_not_kernel = 0, conv_rr_not_q0bar = 0, sb_rr_disagree = 0;
  std::uint64_t violations = 0;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    Rng rng = trial_stream(seed, trial);
    MessageTuple msg(code.s);
    for (std::uint32_t i = 0; i < code.s; ++i) {
      msg[i].c.resize(code.k[i]);
      for (Elem& c : msg[i].c) c = rng.elem(f);
    }
    WordMatrix r = word_add(code, encode(code, msg), sample_rank_error(code, t, rng));

    InterpSolution sol = interpolate(code, r, radius_unique(code));
    RootSystem sys = build_rootfind_system(code, sol);
    bool kernel_deficient = mat_rank(f, sys.a) < code.sum_k();
    bool q0bar_deficient = mat_rank(f, q0bar_matrix(sol)) < code.s;
    bool rr = rr_fails(code, r, t);
    bool sb = sb_fails(code, r, t);

    if (kernel_deficient) kernel_def++;
    if (q0bar_deficient) q0bar_def++;
    if (rr) rr_cnt++;
    if (sb) sb_cnt++;
    if (q0bar_deficient && !kernel_deficient) conv_q0bar_not_kernel++;
    if (rr && !q0bar_deficient) conv_rr_not_q0bar++;
    if (sb != rr) sb_rr_disagree++;

    if (assertable) {
      if (kernel_deficient && !q0bar_deficient) {
        std::cerr << "violation at trial " << trial
                  << ": root system deficient but leading block has full rank\n";
        violations++;
      }
      if (q0bar_deficient && !rr) {
        std::cerr << "violation at trial " << trial
                  << ": leading block deficient but received-word criterion passes\n";
        violations++;
      }
      if (sb != rr) {
        std::cerr << "violation at trial " << trial
                  << ": syndrome and received-word criteria disagree\n";
        violations++;
      }
    }
  }
  std::cout << "trials=" << trials << " t=" << t << " kernel_deficient=" << kernel_def
            << " leading_block_deficient=" << q0bar_def << " rr_fail=" << rr_cnt
            << " sb_fail=" << sb_cnt << "\n";
  std::cout << "converse: leading_block_deficient_without_kernel=" << conv_q0bar_not_kernel
            << " rr_without_leading_block=" << conv_rr_not_q0bar
            << " sb_rr_disagreements=" << sb_rr_disagree << "\n";
  if (!assertable)
    std::cout << "note: implications reported only (needs equal dimensions and t <= "
                 "radius_unique to assert)\n";
  return violations ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation-based decoding of interleaved rank-metric codes"};
  app.require_subcommand(1);

  CodeOpts copts;
  std::string in_path, out_path, erasure_path, mode = "unique", csv;
  std::uint64_t cap = 65536, trials = 1000, seed = 1;
  std::int64_t t_single = -1;
  std::vector<std::uint32_t> t_list, rho;
  std::vector<double> p_list;
  std::uint32_t gamma = 0;
  int workers = 1;
  bool compare = false, serial = false;

  CLI::App* enc = app.add_subcommand("encode", "encode a message file to a word");
  add_code_options(enc, copts);
  enc->add_option("--in", in_path, "message file, one polynomial per row (default stdin)");
  enc->add_option("--out", out_path, "word file (default stdout)");

  CLI::App* dec = app.add_subcommand("decode", "decode a word file");
  add_code_options(dec, copts);
  dec->add_option("--in", in_path, "word file (default stdin)");
  dec->add_option("--out", out_path, "outcome file (default stdout)");
  dec->add_option("--erasures", erasure_path, "erasure side-information file");
  dec->add_option("--mode", mode, "unique or list")
      ->check(CLI::IsMember({"unique", "list"}))
      ->capture_default_str();
  dec->add_option("--cap", cap, "list enumeration cap")->capture_default_str();

  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo decoding experiments");
  add_code_options(sim, copts);
  sim->add_option("--t", t_list, "error rank, repeatable for a sweep");
  sim->add_option("--p-qsc", p_list, "symmetric-channel parameter, repeatable for a sweep");
  CLI::Option* rho_opt =
      sim->add_option("--rho", rho, "row erasures per elementary code")->delimiter(',');
  CLI::Option* gamma_opt = sim->add_option("--gamma", gamma, "shared column erasures");
  sim->add_option("--mode", mode, "unique or list")
      ->check(CLI::IsMember({"unique", "list"}))
      ->capture_default_str();
  sim->add_option("--cap", cap, "list enumeration cap")->capture_default_str();
  sim->add_option("--trials", trials, "trials per sweep point")->capture_default_str();
  sim->add_option("--seed", seed, "master seed")->capture_default_str();
  sim->add_option("--workers", workers, "worker threads")->capture_default_str();
  sim->add_flag("--compare", compare, "also evaluate the classical failure predicates");
  sim->add_flag("--serial", serial, "force the serial runner");
  sim->add_option("--csv", csv, "write one CSV row per sweep point ('-' for stdout)");

  CLI::App* bnd = app.add_subcommand("bounds", "print radii and analytic bounds");
  add_code_options(bnd, copts);
  bnd->add_option("--t", t_single, "error rank (default radius_unique)");

  CLI::App* orc = app.add_subcommand("oracle-check",
                                     "list decoder vs exhaustive codebook search");
  add_code_options(orc, copts);
  orc->add_option("--trials", trials, "trials")->capture_default_str();
  orc->add_option("--seed", seed, "master seed")->capture_default_str();
  orc->add_option("--cap", cap, "list enumeration cap")->capture_default_str();

  CLI::App* lem = app.add_subcommand("lemma-check",
                                     "per-trial implications between failure criteria");
  add_code_options(lem, copts);
  lem->add_option("--t", t_single, "error rank (default radius_unique)");
  lem->add_option("--trials", trials, "trials")->capture_default_str();
  lem->add_option("--seed", seed, "master seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(enc)) return cmd_encode(copts, in_path, out_path);
    if (app.got_subcommand(dec))
      return cmd_decode(copts, in_path, out_path, erasure_path, mode, cap);
    if (app.got_subcommand(sim))
      return cmd_simulate(copts, t_list, p_list, rho, gamma,
                          rho_opt->count() > 0 || gamma_opt->count() > 0, mode, cap, trials,
                          seed, workers, compare, serial, csv);
    if (app.got_subcommand(bnd)) return cmd_bounds(copts, t_single);
    if (app.got_subcommand(orc)) return cmd_oracle(copts, trials, seed, cap);
    if (app.got_subcommand(lem)) return cmd_lemma(copts, t_single, trials, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
