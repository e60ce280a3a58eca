#include "cqfb_cli/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "cqfb/cqt.hpp"
#include "cqfb/cwt.hpp"
#include "cqfb/io/feature_file.hpp"
#include "cqfb/io/wav.hpp"
#include "cqfb/mel.hpp"
#include "cqfb/preprocess.hpp"

namespace cqfb::cli {

TimeFrequencyMatrix compute_features(const Signal& speech, const RunConfig& config) {
  auto features = [&] {
    switch (config.rep) {
      case Representation::kCqt:
        return cqt(speech, config.cqt, config.cqt_mode);
      case Representation::kCwt:
        return cwt_framed(speech, config.cwt);
      case Representation::kMfsc:
        return mfsc(speech, config.mel);
      case Representation::kStft:
        return stft_magnitude(speech, config.mel);
    }
    throw std::invalid_argument("compute_features: unknown representation");
  }();
  return config.cmvn_enabled ? cmvn(features) : features;
}

TimeFrequencyMatrix extract_file(const std::filesystem::path& wav, const RunConfig& config) {
  const auto audio = io::read_wav(wav);
  auto signal = resample_to_16k(io::mixdown(audio));
  if (config.vad_enabled) signal = energy_vad(signal, config.vad);
  return compute_features(signal, config);
}

std::filesystem::path output_path(const std::filesystem::path& input,
                                  const std::filesystem::path& out_dir, OutputFormat format) {
  auto name = input.stem();
  name += format == OutputFormat::kCsv ? ".csv" : ".cqfb";
  return out_dir / name;
}

void write_features(const std::filesystem::path& path, const TimeFrequencyMatrix& m,
                    OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    io::write_feature_csv(path, m);
  } else {
    io::write_cqfb(path, m);
  }
}

std::vector<FileResult> run_extract(const std::vector<std::filesystem::path>& inputs,
                                    const RunConfig& config,
                                    const std::filesystem::path& out_dir, unsigned jobs) {
  std::filesystem::create_directories(out_dir);
  std::vector<FileResult> results(inputs.size());
  std::vector<bool> runnable(inputs.size(), true);
  std::set<std::filesystem::path> claimed;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    results[i].input = inputs[i];
    results[i].output = output_path(inputs[i], out_dir, config.format);
    if (!claimed.insert(results[i].output).second) {
      results[i].error = "output " + results[i].output.string() + " already produced by another input";
      runnable[i] = false;
    }
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      if (!runnable[i]) continue;
      try {
        write_features(results[i].output, extract_file(inputs[i], config), config.format);
      } catch (const std::exception& e) {
        results[i].error = e.what();
      }
    }
  };

  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(inputs.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  return results;
}

}  // namespace cqfb::cli
