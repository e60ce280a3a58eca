#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "cqfb/io/feature_file.hpp"
#include "cqfb/io/wav.hpp"
#include "cqfb/synth.hpp"
#include "cqfb_cli/app.hpp"

namespace cqfb::cli {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

std::string second_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::getline(in, line);
  return line;
}

class AppTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("cqfb_app_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string wav(const std::string& name, const Signal& s) {
    const auto p = dir_ / name;
    io::write_wav(p, s, io::WavEncoding::kPcm16);
    return p.string();
  }

  fs::path dir_;
};

TEST_F(AppTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"extract", "a.wav"}).code, kExitUsage);  // --out missing
  EXPECT_EQ(cli({"extract", "a.wav", "--out", "o", "--rep", "stft"}).code, kExitUsage);
  EXPECT_EQ(cli({"experiment", "fratio", "--out", dir_.string()}).code, kExitUsage);
  EXPECT_EQ(cli({"experiment", "nope", "--out", dir_.string()}).code, kExitUsage);
  EXPECT_EQ(cli({"bench", "--runs", "5"}).code, kExitUsage);
  const auto bad_set = cli({"experiment", "span", "--out", dir_.string(), "--set", "cqt.x=1"});
  EXPECT_EQ(bad_set.code, kExitUsage);
  EXPECT_NE(bad_set.err.find("cqt.x"), std::string::npos);
  EXPECT_EQ(cli({"experiment", "deform", "--out", dir_.string(), "--epsilon", "0.2"}).code,
            kExitUsage);
}

TEST_F(AppTest, HelpExitsZero) {
  const auto r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("extract"), std::string::npos);
}

TEST_F(AppTest, ExtractWritesFilesAndReportsPartialFailure) {
  const auto a = wav("a.wav", synth_tone(440.0, 0.5, 16000, 0.5));
  const auto out = (dir_ / "feat").string();
  auto r = cli({"extract", a, "--out", out, "--format", "csv", "--rep", "mfsc", "--no-vad"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "feat" / "a.csv"));
  EXPECT_NE(r.out.find(" -> "), std::string::npos);
  EXPECT_EQ(first_line(dir_ / "feat" / "a.csv").rfind("bin_hz,frame_0,", 0), 0u);

  r = cli({"extract", a, (dir_ / "missing.wav").string(), "--out", out, "--no-vad"});
  EXPECT_EQ(r.code, kExitPartialFailure);
  EXPECT_TRUE(fs::exists(dir_ / "feat" / "a.cqfb"));
  EXPECT_NE(r.err.find("missing.wav"), std::string::npos);
}

TEST_F(AppTest, ConfigFileThenSetThenFlags) {
  const auto a = wav("a.wav", synth_tone(440.0, 0.5, 16000, 0.5));
  const auto conf = dir_ / "run.conf";
  {
    std::ofstream f(conf);
    f << "rep = cwt\nformat = csv\ncmvn.enabled = true\n";
  }
  const auto out = dir_ / "feat";
  const auto r = cli({"extract", a, "--out", out.string(), "--config", conf.string(), "--set",
                      "format=cqfb", "--no-vad", "--no-cmvn"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto m = io::read_cqfb(out / "a.cqfb");
  EXPECT_EQ(m.representation(), Representation::kCwt);
  EXPECT_FALSE(m.flags().normalized);
}

TEST_F(AppTest, ExperimentCsvs) {
  const auto out = dir_ / "exp";
  auto r = cli({"experiment", "harmonics", "--out", out.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* rep : {"cqt", "stft", "mfsc"}) {
    const auto p = out / (std::string("harmonics_") + rep + ".csv");
    ASSERT_TRUE(fs::exists(p)) << p;
    EXPECT_EQ(first_line(p).rfind("# experiment=harmonics epsilon=", 0), 0u);
    EXPECT_NE(first_line(p).find(std::string("rep=") + rep), std::string::npos);
    EXPECT_EQ(second_line(p), "f0_hz,f0_bin,octave_bin,spacing");
  }

  r = cli({"experiment", "deform", "--out", out.string(), "--epsilon", "0.05"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* rep : {"cqt", "stft"}) {
    const auto p = out / (std::string("deform_") + rep + ".csv");
    EXPECT_EQ(first_line(p).rfind("# experiment=deform epsilon=0.05", 0), 0u);
    EXPECT_EQ(second_line(p), "tone_hz,original_bin,warped_bin,displacement");
  }

  r = cli({"experiment", "span", "--out", out.string(), "--rep", "cqt"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(first_line(out / "span_cqt.csv").find("measure=support"), std::string::npos);
  EXPECT_EQ(second_line(out / "span_cqt.csv"), "bin,center_hz,span_s");
  EXPECT_FALSE(fs::exists(out / "span_cwt.csv"));
}

TEST_F(AppTest, FratioFromManifest) {
  std::ofstream manifest(dir_ / "list.csv");
  manifest << "path,label\n";
  for (int i = 0; i < 3; ++i) {
    manifest << fs::path(wav("lo" + std::to_string(i) + ".wav",
                             synth_tone(150.0 + 10.0 * i, 0.5, 16000, 0.5)))
                    .filename()
                    .string()
             << ",low\n";
    manifest << fs::path(wav("hi" + std::to_string(i) + ".wav",
                             synth_tone(2000.0 + 50.0 * i, 0.5, 16000, 0.5)))
                    .filename()
                    .string()
             << ",high\n";
  }
  manifest.close();
  const auto out = dir_ / "exp";
  const auto r = cli({"experiment", "fratio", "--out", out.string(), "--manifest",
                      (dir_ / "list.csv").string(), "--rep", "mfsc", "--no-vad", "--pooling",
                      "utterances"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto p = out / "fratio_mfsc.csv";
  EXPECT_NE(first_line(p).find("reference=low"), std::string::npos);
  EXPECT_NE(first_line(p).find("pooling=utterances"), std::string::npos);
  EXPECT_EQ(second_line(p), "bin_hz,high");
}

TEST_F(AppTest, Metrics) {
  const auto p = dir_ / "c.csv";
  {
    std::ofstream f(p);
    f << "# rows are true classes\n8,2\n5,5\n";
  }
  const auto r = cli({"metrics", p.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out, "uar,accuracy\n0.65,0.65\n");
  {
    std::ofstream f(p);
    f << "8,2\n5\n";
  }
  EXPECT_EQ(cli({"metrics", p.string()}).code, kExitUsage);
}

TEST_F(AppTest, BenchReport) {
  const auto report = dir_ / "bench.csv";
  const auto r = cli({"bench", "--seconds", "0.25", "--runs", "20", "--rep", "mfsc", "--out",
                      report.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream in(report);
  std::string line;
  do std::getline(in, line);
  while (line.starts_with("#"));
  EXPECT_EQ(line, "representation,runs,mean_s,min_s,max_s");
  std::getline(in, line);
  EXPECT_EQ(line.rfind("mfsc,20,", 0), 0u);
}

TEST_F(AppTest, BinaryExitCodes) {
  const std::string tool = CQFB_TOOL_PATH;
  EXPECT_EQ(std::system((tool + " --help > /dev/null").c_str()), 0);
  const int status = std::system((tool + " metrics /nonexistent.csv 2> /dev/null").c_str());
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitUsage);
}

}  // namespace
}  // namespace cqfb::cli
