#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cqfb/cqt.hpp"
#include "cqfb/cwt.hpp"
#include "cqfb/mel.hpp"
#include "cqfb/preprocess.hpp"
#include "cqfb/signal.hpp"

namespace cqfb::cli {

enum class OutputFormat { kCsv, kCqfb };

/// Unknown key, malformed value or a parameter set that fails validation.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Everything an extraction or experiment run needs. Defaults are the 16 kHz
/// front-end settings (24 bins each, hop 64).
struct RunConfig {
  Representation rep = Representation::kCqt;
  OutputFormat format = OutputFormat::kCqfb;
  CqtParams cqt;
  CqtMode cqt_mode = CqtMode::kFast;
  int cwt_k_first = 3;
  int cwt_k_last = 26;
  int cwt_voices = 3;
  CwtParams cwt;
  MelParams mel;
  bool vad_enabled = true;
  VadParams vad;
  bool cmvn_enabled = true;
  double epsilon = 0.02;

  /// Rebuilds derived fields (CWT scales) and validates every parameter set.
  /// Throws ConfigError.
  void finalize();
};

/// Applies one `key = value` setting. Throws ConfigError for unknown keys or
/// values that do not parse.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// Reads `key = value` lines; blank lines and lines starting with '#' are
/// skipped. Errors name the offending line.
void load_config(RunConfig& config, std::istream& in);
void load_config(RunConfig& config, const std::filesystem::path& path);

/// Sorted list of accepted keys.
std::vector<std::string> known_keys();

OutputFormat output_format_from_string(std::string_view name);
std::string_view to_string(OutputFormat format);

}  // namespace cqfb::cli
