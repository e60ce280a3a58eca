#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>

#include "cqfb/io/feature_file.hpp"
#include "cqfb/io/wav.hpp"
#include "cqfb/synth.hpp"
#include "cqfb_cli/pipeline.hpp"

namespace cqfb::cli {
namespace {

namespace fs = std::filesystem;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cqfb_pipeline_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path tone_wav(const std::string& name, double hz, int rate) {
    const auto p = dir_ / name;
    io::write_wav(p, synth_tone(hz, 1.0, rate, 0.5), io::WavEncoding::kFloat32);
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

std::size_t loudest_row(const TimeFrequencyMatrix& m) {
  std::size_t best = 0;
  double best_sum = -1.0;
  for (std::size_t b = 0; b < m.n_bins(); ++b) {
    double s = 0.0;
    for (double v : m.row(b)) s += v;
    if (s > best_sum) {
      best_sum = s;
      best = b;
    }
  }
  return best;
}

RunConfig raw_config(Representation rep) {
  RunConfig c;
  c.rep = rep;
  c.vad_enabled = false;
  c.cmvn_enabled = false;
  c.finalize();
  return c;
}

TEST_F(PipelineTest, ToneLandsInNearestCqtBin) {
  const auto expected = static_cast<std::size_t>(std::lround(3.0 * std::log2(440.0 / 32.70)));
  for (int rate : {16000, 48000}) {
    const auto m = extract_file(tone_wav("a.wav", 440.0, rate), raw_config(Representation::kCqt));
    EXPECT_EQ(m.sample_rate(), 16000);
    EXPECT_EQ(m.n_bins(), 24u);
    EXPECT_EQ(loudest_row(m), expected) << rate;
  }
}

TEST_F(PipelineTest, MfscFrameCountWithoutVad) {
  const auto m = extract_file(tone_wav("a.wav", 440.0, 16000), raw_config(Representation::kMfsc));
  EXPECT_EQ(m.n_frames(), 1u + (16000u - 320u) / 64u);
  EXPECT_EQ(m.n_bins(), 24u);
}

TEST_F(PipelineTest, CmvnFlagsAndNormalizesRows) {
  auto c = raw_config(Representation::kCqt);
  c.cmvn_enabled = true;
  const auto m = extract_file(tone_wav("a.wav", 440.0, 16000), c);
  EXPECT_TRUE(m.flags().normalized);
  for (std::size_t b = 0; b < m.n_bins(); ++b) {
    double mean = 0.0;
    for (double v : m.row(b)) mean += v;
    EXPECT_NEAR(mean / static_cast<double>(m.n_frames()), 0.0, 1e-9);
  }
}

TEST_F(PipelineTest, OutputPathUsesStemAndFormat) {
  EXPECT_EQ(output_path("/x/y/utt1.wav", "/o", OutputFormat::kCsv), fs::path("/o/utt1.csv"));
  EXPECT_EQ(output_path("utt1.WAV", "o", OutputFormat::kCqfb), fs::path("o/utt1.cqfb"));
}

TEST_F(PipelineTest, ExtractIsDeterministicAcrossThreadCounts) {
  std::vector<fs::path> inputs;
  for (int i = 0; i < 4; ++i) {
    inputs.push_back(tone_wav("u" + std::to_string(i) + ".wav", 200.0 + 100.0 * i, 16000));
  }
  auto c = raw_config(Representation::kCwt);
  const auto r1 = run_extract(inputs, c, dir_ / "one", 1);
  const auto r4 = run_extract(inputs, c, dir_ / "four", 4);
  ASSERT_EQ(r1.size(), 4u);
  ASSERT_EQ(r4.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    ASSERT_TRUE(r1[i].ok()) << r1[i].error;
    ASSERT_TRUE(r4[i].ok()) << r4[i].error;
    EXPECT_EQ(r1[i].input, inputs[i]);
    EXPECT_EQ(slurp(r1[i].output), slurp(r4[i].output));
    EXPECT_EQ(io::read_cqfb(r1[i].output).representation(), Representation::kCwt);
  }
}

TEST_F(PipelineTest, FailuresAreReportedPerFile) {
  fs::create_directories(dir_ / "b");
  const auto good = tone_wav("x.wav", 300.0, 16000);
  const auto twin = tone_wav("b/x.wav", 300.0, 16000);
  {
    std::ofstream junk(dir_ / "junk.wav");
    junk << "not a wav";
  }
  auto c = raw_config(Representation::kMfsc);
  c.format = OutputFormat::kCsv;
  const auto r = run_extract({good, dir_ / "junk.wav", dir_ / "missing.wav", twin}, c,
                             dir_ / "out", 2);
  ASSERT_EQ(r.size(), 4u);
  EXPECT_TRUE(r[0].ok());
  EXPECT_TRUE(fs::exists(dir_ / "out" / "x.csv"));
  EXPECT_FALSE(r[1].ok());
  EXPECT_FALSE(r[2].ok());
  EXPECT_FALSE(r[3].ok());  // same output name as the first input
}

}  // namespace
}  // namespace cqfb::cli
