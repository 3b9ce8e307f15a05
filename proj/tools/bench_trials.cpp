// Compares the serial runner against the thread-parallel one on a fixed
// workload and checks that every counter matches bit for bit.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "rankdec/runner.hpp"

using namespace rankdec;

namespace {

bool same_counters(const ExperimentResult& a, const ExperimentResult& b) {
  return a.trials == b.trials && a.successes == b.successes && a.failures == b.failures &&
         a.wrong == b.wrong && a.overflow == b.overflow && a.fail_rank == b.fail_rank &&
         a.fail_radius == b.fail_radius && a.list_items == b.list_items &&
         a.list_outcomes == b.list_outcomes && a.t_hist == b.t_hist;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = 20000;
  if (argc > 1) trials = std::strtoull(argv[1], nullptr, 10);

  ExperimentConfig cfg;
  cfg.q = 2;
  cfg.m = 7;
  cfg.n = 7;
  cfg.s = 2;
  cfg.k = {2, 2};
  cfg.channel = ChannelKind::FixedRank;
  cfg.t = 3;
  cfg.trials = trials;
  cfg.seed = 42;

  ExperimentResult ref = run_experiment_serial(cfg);
  std::cout << "serial: " << trials << " trials in " << ref.elapsed_sec << "s ("
            << double(trials) / ref.elapsed_sec << " trials/s), failures=" << ref.failures
            << "\n";

  bool ok = true;
  for (int w : {1, 2, 4, 8}) {
    cfg.workers = w;
    ExperimentResult res = run_experiment(cfg);
    bool match = same_counters(ref, res);
    ok = ok && match;
    std::cout << "workers=" << w << ": " << res.elapsed_sec << "s, speedup "
              << ref.elapsed_sec / res.elapsed_sec << "x, counters "
              << (match ? "match" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}
