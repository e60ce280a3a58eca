#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cqfb/analysis.hpp"
#include "cqfb/experiments.hpp"
#include "cqfb/span.hpp"
#include "cqfb_cli/config.hpp"

namespace cqfb::cli {

/// Experiment names accepted by run_experiment.
inline constexpr std::string_view kExperimentNames[] = {"fratio", "harmonics", "deform", "span"};

struct ExperimentOptions {
  /// Front-ends to evaluate for fratio and span; empty means cqt, cwt and mfsc.
  std::vector<Representation> reps;
  /// fratio only: CSV lines `path,label`; relative paths resolve against the
  /// manifest's directory. A leading `path,label` header line is allowed.
  std::filesystem::path manifest;
  /// fratio only: label every other class is compared against. Empty picks the
  /// first label in the manifest.
  std::string reference;
  FRatioPooling pooling = FRatioPooling::kFrames;
  SpanOptions span;
};

struct ManifestEntry {
  std::filesystem::path path;
  std::string label;
};

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& manifest);

/// Runs one experiment and writes `<name>_<rep>.csv` files into out_dir.
/// Returns the written paths. Throws ConfigError for an unknown name.
std::vector<std::filesystem::path> run_experiment(std::string_view name, const RunConfig& config,
                                                  const ExperimentOptions& options,
                                                  const std::filesystem::path& out_dir);

// CSV writers. Each starts with `# experiment=<name> epsilon=<val> rep=<rep> ...`
// followed by a header row.

void write_harmonics_csv(std::ostream& out, const std::vector<HarmonicSpacingRow>& rows,
                         Representation rep, const RunConfig& config);
void write_deform_csv(std::ostream& out, const std::vector<DeformationRow>& rows,
                      Representation rep, const RunConfig& config);
void write_span_csv(std::ostream& out, const InvarianceProfile& profile,
                    const RunConfig& config, const SpanOptions& span);
void write_fratio_csv(std::ostream& out, const std::vector<double>& bin_hz,
                      const std::vector<std::string>& targets,
                      const std::vector<std::vector<double>>& ratios, Representation rep,
                      const std::string& reference, FRatioPooling pooling,
                      const RunConfig& config);

}  // namespace cqfb::cli
