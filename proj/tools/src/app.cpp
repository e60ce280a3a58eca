#include "cqfb_cli/app.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "cqfb/analysis.hpp"
#include "cqfb/error.hpp"
#include "cqfb/io/feature_file.hpp"
#include "cqfb_cli/bench.hpp"
#include "cqfb_cli/config.hpp"
#include "cqfb_cli/experiment_runner.hpp"
#include "cqfb_cli/metrics_file.hpp"
#include "cqfb_cli/pipeline.hpp"

namespace cqfb::cli {
namespace {

namespace fs = std::filesystem;

/// Options shared by subcommands that build a RunConfig.
struct CommonOptions {
  std::string config_path;
  std::optional<std::string> rep;
  std::optional<std::string> format;
  std::optional<double> epsilon;
  bool no_vad = false;
  bool no_cmvn = false;
  std::vector<std::string> settings;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool with_format, bool with_epsilon) {
  cmd->add_option("--config", o.config_path, "Plain-text key = value configuration file")
      ->check(CLI::ExistingFile);
  cmd->add_option("--rep", o.rep, "Front-end")->check(CLI::IsMember({"cqt", "cwt", "mfsc"}));
  if (with_format) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "cqfb"}));
  }
  if (with_epsilon) cmd->add_option("--epsilon", o.epsilon, "Time-warp factor for deform");
  cmd->add_flag("--no-vad", o.no_vad, "Skip speech activity detection");
  cmd->add_flag("--no-cmvn", o.no_cmvn, "Skip mean-variance normalization");
  cmd->add_option("--set", o.settings, "Extra key=value setting (repeatable)");
}

RunConfig build_config(const CommonOptions& o) {
  RunConfig config;
  if (!o.config_path.empty()) load_config(config, fs::path(o.config_path));
  for (const auto& kv : o.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got " + kv);
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(' ');
      const auto b = s.find_last_not_of(' ');
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    apply_setting(config, trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
  }
  if (o.rep) apply_setting(config, "rep", *o.rep);
  if (o.format) apply_setting(config, "format", *o.format);
  if (o.epsilon) config.epsilon = *o.epsilon;
  if (o.no_vad) config.vad_enabled = false;
  if (o.no_cmvn) config.cmvn_enabled = false;
  config.finalize();
  return config;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-Q, wavelet and mel filterbank feature extraction", "cqfb"};
  app.require_subcommand(1);

  CommonOptions extract_opts;
  std::vector<std::string> inputs;
  std::string extract_out;
  unsigned jobs = 1;
  auto* extract = app.add_subcommand("extract", "Extract features from WAV files");
  extract->add_option("inputs", inputs, "Input WAV files")->required();
  extract->add_option("--out", extract_out, "Output directory")->required();
  extract->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  add_common(extract, extract_opts, true, false);

  CommonOptions exp_opts;
  std::string exp_name;
  std::string exp_out;
  std::string manifest;
  std::string reference;
  std::string pooling = "frames";
  std::string span_measure = "support";
  double span_fraction = 0.99;
  auto* experiment = app.add_subcommand("experiment", "Run an analysis experiment, writing CSVs");
  experiment->add_option("name", exp_name, "Experiment")
      ->required()
      ->check(CLI::IsMember({"fratio", "harmonics", "deform", "span"}));
  experiment->add_option("--out", exp_out, "Output directory")->required();
  experiment->add_option("--manifest", manifest, "fratio: CSV of path,label")
      ->check(CLI::ExistingFile);
  experiment->add_option("--reference", reference, "fratio: reference label");
  experiment->add_option("--pooling", pooling, "fratio: observation unit")
      ->check(CLI::IsMember({"frames", "utterances"}));
  experiment->add_option("--span-measure", span_measure, "span: spread measure")
      ->check(CLI::IsMember({"support", "energy"}));
  experiment->add_option("--span-fraction", span_fraction, "span: energy fraction")
      ->check(CLI::Range(0.0, 1.0));
  add_common(experiment, exp_opts, false, true);

  CommonOptions bench_opts;
  double seconds = 1.0;
  std::size_t runs = 20;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Wall-time benchmark of each front-end");
  bench->add_option("--seconds", seconds, "Seconds of audio")->check(CLI::PositiveNumber);
  bench->add_option("--runs", runs, "Runs per representation")->check(CLI::Range(20, 100000));
  bench->add_option("--out", bench_out, "Write the report to this file instead of stdout");
  add_common(bench, bench_opts, false, false);

  std::string contingency;
  auto* metrics = app.add_subcommand("metrics", "UAR and accuracy of a contingency matrix CSV");
  metrics->add_option("contingency", contingency, "K x K count CSV")->required();

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("cqfb");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "cqfb: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*extract) {
      const auto config = build_config(extract_opts);
      std::vector<fs::path> paths(inputs.begin(), inputs.end());
      const auto results = run_extract(paths, config, extract_out, jobs);
      int status = kExitOk;
      for (const auto& r : results) {
        if (r.ok()) {
          out << r.input.string() << " -> " << r.output.string() << '\n';
        } else {
          err << "cqfb: " << r.input.string() << ": " << r.error << '\n';
          status = kExitPartialFailure;
        }
      }
      return status;
    }
    if (*experiment) {
      const auto config = build_config(exp_opts);
      ExperimentOptions options;
      if (exp_opts.rep) options.reps = {representation_from_string(*exp_opts.rep)};
      options.manifest = manifest;
      options.reference = reference;
      options.pooling = pooling == "frames" ? FRatioPooling::kFrames : FRatioPooling::kUtterances;
      options.span.measure = span_measure == "support" ? SpanMeasure::kSupport : SpanMeasure::kEnergy;
      options.span.energy_fraction = span_fraction;
      if (exp_name == "fratio" && manifest.empty()) {
        err << "cqfb: experiment fratio requires --manifest\n";
        return kExitUsage;
      }
      try {
        for (const auto& p : run_experiment(exp_name, config, options, exp_out)) {
          out << p.string() << '\n';
        }
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        err << "cqfb: experiment " << exp_name << ": " << e.what() << '\n';
        return kExitPartialFailure;
      }
      return kExitOk;
    }
    if (*bench) {
      const auto config = build_config(bench_opts);
      std::vector<Representation> reps = {Representation::kCqt, Representation::kCwt,
                                          Representation::kMfsc};
      if (bench_opts.rep) reps = {representation_from_string(*bench_opts.rep)};
      const auto results = run_bench(config, seconds, reps, runs);
      if (bench_out.empty()) {
        write_bench_csv(out, results, seconds);
      } else {
        std::ofstream f(bench_out);
        if (!f) throw std::runtime_error("cannot open " + bench_out);
        write_bench_csv(f, results, seconds);
      }
      return kExitOk;
    }
    if (*metrics) {
      ContingencyMatrix c = [&] {
        try {
          return read_contingency(fs::path(contingency));
        } catch (const FormatError& e) {
          throw ConfigError(e.what());
        }
      }();
      out << "uar,accuracy\n"
          << io::format_number(uar(c)) << ',' << io::format_number(accuracy(c)) << '\n';
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    err << "cqfb: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "cqfb: " << e.what() << '\n';
    return kExitPartialFailure;
  }
  return kExitUsage;
}

}  // namespace cqfb::cli
