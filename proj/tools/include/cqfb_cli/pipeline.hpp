#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "cqfb/signal.hpp"
#include "cqfb_cli/config.hpp"

namespace cqfb::cli {

/// Front-end plus optional CMVN on a mono 16 kHz signal that has already been
/// through speech activity detection.
TimeFrequencyMatrix compute_features(const Signal& speech, const RunConfig& config);

/// Full per-file chain: decode, channel average, resample to 16 kHz, VAD
/// (when enabled), front-end, CMVN (when enabled).
TimeFrequencyMatrix extract_file(const std::filesystem::path& wav, const RunConfig& config);

/// <out_dir>/<input stem>.<csv|cqfb>
std::filesystem::path output_path(const std::filesystem::path& input,
                                  const std::filesystem::path& out_dir, OutputFormat format);

void write_features(const std::filesystem::path& path, const TimeFrequencyMatrix& m,
                    OutputFormat format);

struct FileResult {
  std::filesystem::path input;
  std::filesystem::path output;
  std::string error;  ///< empty on success
  bool ok() const noexcept { return error.empty(); }
};

/// Creates out_dir if needed and processes every input with up to `jobs` worker threads. Results come back
/// in input order. Inputs whose output path collides with an earlier input's
/// fail without being processed.
std::vector<FileResult> run_extract(const std::vector<std::filesystem::path>& inputs,
                                    const RunConfig& config,
                                    const std::filesystem::path& out_dir, unsigned jobs = 1);

}  // namespace cqfb::cli
