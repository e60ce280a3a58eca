#include "cqfb_cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>
#include <stdexcept>

#include "cqfb/io/feature_file.hpp"
#include "cqfb/synth.hpp"
#include "cqfb_cli/pipeline.hpp"

namespace cqfb::cli {

std::vector<BenchResult> run_bench(const RunConfig& config, double seconds,
                                   const std::vector<Representation>& reps, std::size_t runs) {
  if (!(seconds > 0.0)) throw std::invalid_argument("run_bench: seconds must be positive");
  if (runs == 0) throw std::invalid_argument("run_bench: runs must be >= 1");
  const Signal noise = synth_noise(seconds, 16000, 20240601, 0.5);
  std::vector<BenchResult> results;
  for (auto rep : reps) {
    RunConfig rc = config;
    rc.rep = rep;
    rc.cmvn_enabled = false;
    BenchResult r;
    r.rep = rep;
    r.runs = runs;
    double total = 0.0;
    for (std::size_t i = 0; i < runs; ++i) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto m = compute_features(noise, rc);
      const auto t1 = std::chrono::steady_clock::now();
      if (m.n_bins() == 0) throw std::logic_error("run_bench: empty output");
      const double dt = std::chrono::duration<double>(t1 - t0).count();
      total += dt;
      r.min_s = i == 0 ? dt : std::min(r.min_s, dt);
      r.max_s = std::max(r.max_s, dt);
    }
    r.mean_s = total / static_cast<double>(runs);
    results.push_back(r);
  }
  return results;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchResult>& results, double seconds) {
  out << "# bench seconds=" << io::format_number(seconds) << '\n';
  out << "representation,runs,mean_s,min_s,max_s\n";
  for (const auto& r : results) {
    out << to_string(r.rep) << ',' << r.runs << ',' << io::format_number(r.mean_s) << ','
        << io::format_number(r.min_s) << ',' << io::format_number(r.max_s) << '\n';
  }
}

}  // namespace cqfb::cli
