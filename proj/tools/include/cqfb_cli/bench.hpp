#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "cqfb/signal.hpp"
#include "cqfb_cli/config.hpp"

namespace cqfb::cli {

struct BenchResult {
  Representation rep = Representation::kCqt;
  std::size_t runs = 0;
  double mean_s = 0.0;
  double min_s = 0.0;
  double max_s = 0.0;
};

/// Times the front-end alone (no VAD, no CMVN) on `seconds` of seeded white
/// noise at 16 kHz, `runs` times per representation. Requires seconds > 0 and
/// runs >= 1.
std::vector<BenchResult> run_bench(const RunConfig& config, double seconds,
                                   const std::vector<Representation>& reps,
                                   std::size_t runs = 20);

/// `representation,runs,mean_s,min_s,max_s` rows.
void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results, double seconds);

}  // namespace cqfb::cli
