#include "cqfb_cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <map>

namespace cqfb::cli {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view want) {
  throw ConfigError("invalid value '" + std::string(value) + "' for " + std::string(key) +
                    " (expected " + std::string(want) + ")");
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size()) bad_value(key, v, "a number");
  return out;
}

template <typename Int>
Int parse_int(std::string_view key, std::string_view v) {
  Int out{};
  const auto r = std::from_chars(v.data(), v.data() + v.size(), out);
  if (r.ec != std::errc{} || r.ptr != v.data() + v.size()) bad_value(key, v, "an integer");
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  bad_value(key, v, "true or false");
}

using Setter = std::function<void(RunConfig&, std::string_view, std::string_view)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"rep",
       [](RunConfig& c, auto k, auto v) {
         try {
           c.rep = representation_from_string(v);
         } catch (const std::invalid_argument&) {
           bad_value(k, v, "cqt, cwt or mfsc");
         }
         if (c.rep == Representation::kStft) bad_value(k, v, "cqt, cwt or mfsc");
       }},
      {"format",
       [](RunConfig& c, auto k, auto v) {
         try {
           c.format = output_format_from_string(v);
         } catch (const std::invalid_argument&) {
           bad_value(k, v, "csv or cqfb");
         }
       }},
      {"cqt.f_min", [](RunConfig& c, auto k, auto v) { c.cqt.f_min = parse_double(k, v); }},
      {"cqt.bins_per_octave",
       [](RunConfig& c, auto k, auto v) { c.cqt.bins_per_octave = parse_int<std::size_t>(k, v); }},
      {"cqt.n_bins",
       [](RunConfig& c, auto k, auto v) { c.cqt.n_bins = parse_int<std::size_t>(k, v); }},
      {"cqt.hop_length",
       [](RunConfig& c, auto k, auto v) { c.cqt.hop_length = parse_int<std::size_t>(k, v); }},
      {"cqt.sparsity_threshold",
       [](RunConfig& c, auto k, auto v) { c.cqt.sparsity_threshold = parse_double(k, v); }},
      {"cqt.mode",
       [](RunConfig& c, auto k, auto v) {
         if (v == "fast") {
           c.cqt_mode = CqtMode::kFast;
         } else if (v == "direct") {
           c.cqt_mode = CqtMode::kDirect;
         } else {
           bad_value(k, v, "fast or direct");
         }
       }},
      {"cwt.k_first", [](RunConfig& c, auto k, auto v) { c.cwt_k_first = parse_int<int>(k, v); }},
      {"cwt.k_last", [](RunConfig& c, auto k, auto v) { c.cwt_k_last = parse_int<int>(k, v); }},
      {"cwt.voices", [](RunConfig& c, auto k, auto v) { c.cwt_voices = parse_int<int>(k, v); }},
      {"cwt.bandwidth",
       [](RunConfig& c, auto k, auto v) { c.cwt.bandwidth = parse_double(k, v); }},
      {"cwt.center_frequency",
       [](RunConfig& c, auto k, auto v) { c.cwt.center_frequency = parse_double(k, v); }},
      {"cwt.frame_length",
       [](RunConfig& c, auto k, auto v) { c.cwt.frame_length = parse_int<std::size_t>(k, v); }},
      {"cwt.hop_length",
       [](RunConfig& c, auto k, auto v) { c.cwt.hop_length = parse_int<std::size_t>(k, v); }},
      {"mel.win_length",
       [](RunConfig& c, auto k, auto v) { c.mel.win_length = parse_int<std::size_t>(k, v); }},
      {"mel.hop_length",
       [](RunConfig& c, auto k, auto v) { c.mel.hop_length = parse_int<std::size_t>(k, v); }},
      {"mel.n_fft", [](RunConfig& c, auto k, auto v) { c.mel.n_fft = parse_int<std::size_t>(k, v); }},
      {"mel.n_filters",
       [](RunConfig& c, auto k, auto v) { c.mel.n_filters = parse_int<std::size_t>(k, v); }},
      {"mel.f_low", [](RunConfig& c, auto k, auto v) { c.mel.f_low = parse_double(k, v); }},
      {"mel.f_high", [](RunConfig& c, auto k, auto v) { c.mel.f_high = parse_double(k, v); }},
      {"mel.log_floor", [](RunConfig& c, auto k, auto v) { c.mel.log_floor = parse_double(k, v); }},
      {"mel.log", [](RunConfig& c, auto k, auto v) { c.mel.apply_log = parse_bool(k, v); }},
      {"vad.enabled", [](RunConfig& c, auto k, auto v) { c.vad_enabled = parse_bool(k, v); }},
      {"vad.frame_length",
       [](RunConfig& c, auto k, auto v) { c.vad.frame_length = parse_int<std::size_t>(k, v); }},
      {"vad.hop_length",
       [](RunConfig& c, auto k, auto v) { c.vad.hop_length = parse_int<std::size_t>(k, v); }},
      {"vad.threshold_db",
       [](RunConfig& c, auto k, auto v) { c.vad.threshold_db = parse_double(k, v); }},
      {"cmvn.enabled", [](RunConfig& c, auto k, auto v) { c.cmvn_enabled = parse_bool(k, v); }},
      {"experiment.epsilon",
       [](RunConfig& c, auto k, auto v) { c.epsilon = parse_double(k, v); }},
  };
  return table;
}

}  // namespace

OutputFormat output_format_from_string(std::string_view name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "cqfb") return OutputFormat::kCqfb;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::kCsv ? "csv" : "cqfb";
}

void RunConfig::finalize() {
  if (cwt_voices <= 0 || cwt_k_first > cwt_k_last) {
    throw ConfigError("cwt scale range needs voices > 0 and k_first <= k_last");
  }
  cwt.scales = CwtParams::dyadic_scales(cwt_k_first, cwt_k_last, cwt_voices);
  if (!(epsilon >= 0.0 && epsilon < 0.1)) {
    throw ConfigError("experiment.epsilon must lie in [0, 0.1)");
  }
  try {
    cqt.validate();
    cwt.validate();
    mel.validate();
    vad.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void apply_setting(RunConfig& config, std::string_view key, std::string_view value) {
  const auto& table = setters();
  const auto it = table.find(key);
  if (it == table.end()) throw ConfigError("unknown config key: " + std::string(key));
  it->second(config, key, value);
}

void load_config(RunConfig& config, std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(config, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void load_config(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  load_config(config, in);
}

std::vector<std::string> known_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, _] : setters()) keys.push_back(k);
  return keys;
}

}  // namespace cqfb::cli
