#include "cqfb_cli/experiment_runner.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include "cqfb/error.hpp"
#include "cqfb/io/feature_file.hpp"
#include "cqfb_cli/pipeline.hpp"

namespace cqfb::cli {
namespace {

using io::format_number;

void comment_line(std::ostream& out, std::string_view name, Representation rep,
                  const RunConfig& config) {
  out << "# experiment=" << name << " epsilon=" << format_number(config.epsilon)
      << " rep=" << to_string(rep);
}

std::ofstream open_csv(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  return out;
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<Representation> reps_or_default(const ExperimentOptions& options) {
  if (!options.reps.empty()) return options.reps;
  return {Representation::kCqt, Representation::kCwt, Representation::kMfsc};
}

std::filesystem::path csv_path(const std::filesystem::path& dir, std::string_view name,
                               Representation rep) {
  return dir / (std::string(name) + "_" + std::string(to_string(rep)) + ".csv");
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest) {
  std::ifstream in(manifest);
  if (!in) throw FormatError("cannot open manifest " + manifest.string());
  const auto base = manifest.parent_path();
  std::vector<ManifestEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": expected path,label");
    }
    std::string path = trim(line.substr(0, comma));
    std::string label = trim(line.substr(comma + 1));
    if (line_no == 1 && path == "path" && label == "label") continue;
    if (path.empty() || label.empty()) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": empty path or label");
    }
    std::filesystem::path p(path);
    if (p.is_relative()) p = base / p;
    if (!std::filesystem::exists(p)) {
      throw FormatError("manifest line " + std::to_string(line_no) + ": missing file " +
                        p.string());
    }
    entries.push_back({p, label});
  }
  if (entries.empty()) throw FormatError("manifest " + manifest.string() + " has no entries");
  return entries;
}

void write_harmonics_csv(std::ostream& out, const std::vector<HarmonicSpacingRow>& rows,
                         Representation rep, const RunConfig& config) {
  comment_line(out, "harmonics", rep, config);
  out << " bins=" << (rep == Representation::kStft ? "fft_bin" : "row") << '\n';
  out << "f0_hz,f0_bin,octave_bin,spacing\n";
  for (const auto& r : rows) {
    const PeakPair& p = rep == Representation::kCqt    ? r.cqt
                        : rep == Representation::kStft ? r.stft
                                                       : r.mfsc;
    out << format_number(r.f0_hz) << ',' << p.f0_bin << ',' << p.octave_bin << ','
        << p.spacing() << '\n';
  }
}

void write_deform_csv(std::ostream& out, const std::vector<DeformationRow>& rows,
                      Representation rep, const RunConfig& config) {
  comment_line(out, "deform", rep, config);
  out << '\n' << "tone_hz,original_bin,warped_bin,displacement\n";
  for (const auto& r : rows) {
    const PeakShift& s = rep == Representation::kCqt ? r.cqt : r.stft;
    out << format_number(r.tone_hz) << ',' << s.original_bin << ',' << s.warped_bin << ','
        << s.displacement() << '\n';
  }
}

void write_span_csv(std::ostream& out, const InvarianceProfile& profile,
                    const RunConfig& config, const SpanOptions& span) {
  comment_line(out, "span", profile.kind, config);
  out << " measure=" << (span.measure == SpanMeasure::kSupport ? "support" : "energy");
  if (span.measure == SpanMeasure::kEnergy) out << " fraction=" << format_number(span.energy_fraction);
  out << '\n' << "bin,center_hz,span_s\n";
  for (std::size_t b = 0; b < profile.center_hz.size(); ++b) {
    out << b << ',' << format_number(profile.center_hz[b]) << ','
        << format_number(profile.span_s[b]) << '\n';
  }
}

void write_fratio_csv(std::ostream& out, const std::vector<double>& bin_hz,
                      const std::vector<std::string>& targets,
                      const std::vector<std::vector<double>>& ratios, Representation rep,
                      const std::string& reference, FRatioPooling pooling,
                      const RunConfig& config) {
  comment_line(out, "fratio", rep, config);
  out << " reference=" << reference
      << " pooling=" << (pooling == FRatioPooling::kFrames ? "frames" : "utterances") << '\n';
  out << "bin_hz";
  for (const auto& t : targets) out << ',' << t;
  out << '\n';
  for (std::size_t b = 0; b < bin_hz.size(); ++b) {
    out << format_number(bin_hz[b]);
    for (const auto& r : ratios) out << ',' << format_number(r[b]);
    out << '\n';
  }
}

std::vector<std::filesystem::path> run_experiment(std::string_view name, const RunConfig& config,
                                                  const ExperimentOptions& options,
                                                  const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> written;
  std::filesystem::create_directories(out_dir);

  if (name == "harmonics") {
    HarmonicSpacingConfig hc;
    hc.cqt = config.cqt;
    hc.mel = config.mel;
    const auto rows = harmonic_spacing_experiment(hc);
    for (auto rep : {Representation::kCqt, Representation::kStft, Representation::kMfsc}) {
      written.push_back(csv_path(out_dir, name, rep));
      auto out = open_csv(written.back());
      write_harmonics_csv(out, rows, rep, config);
    }
  } else if (name == "deform") {
    DeformationConfig dc;
    dc.epsilon = config.epsilon;
    dc.cqt = config.cqt;
    dc.mel = config.mel;
    const auto rows = deformation_experiment(dc);
    for (auto rep : {Representation::kCqt, Representation::kStft}) {
      written.push_back(csv_path(out_dir, name, rep));
      auto out = open_csv(written.back());
      write_deform_csv(out, rows, rep, config);
    }
  } else if (name == "span") {
    for (auto rep : reps_or_default(options)) {
      InvarianceProfile profile;
      switch (rep) {
        case Representation::kCqt:
          profile = temporal_span_profile(config.cqt, options.span);
          break;
        case Representation::kCwt:
          profile = temporal_span_profile(config.cwt, options.span);
          break;
        case Representation::kMfsc:
          profile = temporal_span_profile(config.mel, options.span);
          break;
        case Representation::kStft:
          throw ConfigError("span: stft has no filterbank profile");
      }
      written.push_back(csv_path(out_dir, name, rep));
      auto out = open_csv(written.back());
      write_span_csv(out, profile, config, options.span);
    }
  } else if (name == "fratio") {
    if (options.manifest.empty()) throw ConfigError("fratio needs --manifest");
    const auto manifest = read_manifest(options.manifest);
    for (auto rep : reps_or_default(options)) {
      RunConfig rc = config;
      rc.rep = rep;
      LabeledFeatureSet set;
      for (const auto& entry : manifest) set.add(extract_file(entry.path, rc), entry.label);
      const auto labels = set.labels();
      const std::string reference = options.reference.empty() ? labels.front() : options.reference;
      if (std::find(labels.begin(), labels.end(), reference) == labels.end()) {
        throw ConfigError("fratio: reference label '" + reference + "' not in manifest");
      }
      std::vector<std::string> targets;
      std::vector<std::vector<double>> ratios;
      for (const auto& label : labels) {
        if (label == reference) continue;
        targets.push_back(label);
        ratios.push_back(f_ratio(set, label, reference, options.pooling));
      }
      if (targets.empty()) throw ConfigError("fratio: manifest needs at least two labels");
      written.push_back(csv_path(out_dir, name, rep));
      auto out = open_csv(written.back());
      write_fratio_csv(out, set.bin_frequencies(), targets, ratios, rep, reference,
                       options.pooling, config);
    }
  } else {
    throw ConfigError("unknown experiment: " + std::string(name));
  }
  return written;
}

}  // namespace cqfb::cli
