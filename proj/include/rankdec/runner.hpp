// Monte-Carlo experiment harness.
//
// Each trial derives its own random stream from (seed, trial index), so the
// parallel and the serial runner produce identical counters for any worker
// count; the parallel runner only partitions the index range.

#pragma once

#include <iosfwd>
#include <memory>

#include "rankdec/codes.hpp"
#include "rankdec/interp_decoder.hpp"

namespace rankdec {

enum class ChannelKind { FixedRank, Qsc, Erasure };

struct ExperimentConfig {
  std::uint32_t q = 2, m = 7, n = 7, s = 2;
  std::vector<std::uint32_t> k{2, 2};
  std::vector<std::uint32_t> modulus;  // optional override, digits c_0..c_m

  ChannelKind channel = ChannelKind::FixedRank;
  std::uint32_t t = 0;     // FixedRank / Erasure: rank of the (full) error
  double p_qsc = 0.0;      // Qsc: per-coordinate error probability
  std::vector<std::uint32_t> rho;  // Erasure: row erasures per elementary code
  std::uint32_t gamma = 0;         // Erasure: shared column erasures

  DecodeMode mode = DecodeMode::Unique;
  std::uint64_t list_cap = 65536;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  int workers = 1;
  bool compare = false;  // also evaluate the classical predicates (FixedRank only)
};

struct ExperimentResult {
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  std::uint64_t failures = 0;  // declared failures + empty lists; excludes overflow
  std::uint64_t wrong = 0;     // output produced, transmitted message absent
  std::uint64_t overflow = 0;  // list enumeration over the cap
  std::uint64_t fail_rank = 0;
  std::uint64_t fail_radius = 0;
  std::uint64_t list_items = 0;
  std::uint64_t list_outcomes = 0;
  std::uint64_t rr_fail = 0, sb_fail = 0, predicate_disagree = 0;
  std::vector<std::uint64_t> t_hist;  // drawn error ranks
  double elapsed_sec = 0.0;

  double failure_rate() const { return trials ? double(failures) / double(trials) : 0.0; }
  void add(const ExperimentResult& o);
};

std::shared_ptr<const Field> make_field_from(const ExperimentConfig& cfg);
InterleavedCode make_code_from(const ExperimentConfig& cfg);

ExperimentResult run_experiment(const ExperimentConfig& cfg);
ExperimentResult run_experiment_serial(const ExperimentConfig& cfg);

// List decoding vs exhaustive ball search over the whole codebook; error rank
// cycles through 0..min(radius_list+1, n, s*m).
struct OracleConfig {
  std::uint32_t q = 2, m = 4, n = 4, s = 2;
  std::vector<std::uint32_t> k{1, 1};
  std::vector<std::uint32_t> modulus;
  std::uint64_t trials = 0, seed = 0;
  std::uint64_t list_cap = 65536;
  std::uint64_t max_codebook = std::uint64_t(1) << 20;
};

struct OracleReport {
  std::uint64_t trials = 0, mismatches = 0;
  std::vector<std::uint64_t> t_counts;
};

OracleReport run_oracle_check(const OracleConfig& cfg);

// CSV schema: trials,successes,failures,wrong,overflow,failure_rate,
// wilson_lo,wilson_hi,bound_lo,bound_alt. bound_lo is left empty when not
// applicable.
void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const ExperimentResult& res, double bound_lo,
                   bool bound_lo_valid, double bound_alt);

}  // namespace rankdec
