#include <gtest/gtest.h>

#include <cstdint>
#include <filesystem>
#include <sstream>
#include <string>

#include "cqfb/error.hpp"
#include "cqfb/io/wav.hpp"

namespace cqfb::io {
namespace {

void put16(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>(v >> 8));
}
void put32(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

// Hand-assembled canonical WAV, independent of the writer.
std::string wav_bytes(std::uint16_t format, std::uint16_t channels, std::uint32_t rate,
                      std::uint16_t bits, const std::string& data, bool extensible = false) {
  std::string fmt;
  put16(fmt, extensible ? 0xFFFE : format);
  put16(fmt, channels);
  put32(fmt, rate);
  put32(fmt, rate * channels * bits / 8);
  put16(fmt, static_cast<std::uint16_t>(channels * bits / 8));
  put16(fmt, bits);
  if (extensible) {
    put16(fmt, 22);
    put16(fmt, bits);
    put32(fmt, 0);
    put16(fmt, format);
    fmt += std::string("\x00\x00\x00\x00\x10\x00\x80\x00\x00\xAA\x00\x38\x9B\x71", 14);
  }
  std::string s = "RIFF";
  put32(s, static_cast<std::uint32_t>(4 + 8 + fmt.size() + 8 + data.size()));
  s += "WAVEfmt ";
  put32(s, static_cast<std::uint32_t>(fmt.size()));
  s += fmt;
  s += "data";
  put32(s, static_cast<std::uint32_t>(data.size()));
  s += data;
  return s;
}

WavAudio parse(const std::string& bytes) {
  std::istringstream in(bytes);
  return read_wav(in);
}

TEST(WavRead, Pcm16Stereo) {
  std::string data;
  put16(data, 16384);
  put16(data, static_cast<std::uint16_t>(-32768));
  put16(data, static_cast<std::uint16_t>(-16384));
  put16(data, 0);
  const auto a = parse(wav_bytes(1, 2, 16000, 16, data));
  EXPECT_EQ(a.sample_rate, 16000);
  EXPECT_EQ(a.encoding, WavEncoding::kPcm16);
  ASSERT_EQ(a.channels.size(), 2u);
  EXPECT_EQ(a.channels[0], (std::vector<double>{0.5, -0.5}));
  EXPECT_EQ(a.channels[1], (std::vector<double>{-1.0, 0.0}));
  const auto mono = mixdown(a);
  EXPECT_EQ(mono.sample_rate(), 16000);
  EXPECT_DOUBLE_EQ(mono[0], -0.25);
  EXPECT_DOUBLE_EQ(mono[1], -0.25);
}

TEST(WavRead, OtherEncodings) {
  const auto u8 = parse(wav_bytes(1, 1, 8000, 8, std::string("\x80\xC0\x00", 3)));
  EXPECT_EQ(u8.channels[0], (std::vector<double>{0.0, 0.5, -1.0}));

  const auto s24 = parse(wav_bytes(1, 1, 8000, 24, std::string("\x00\x00\x40\x00\x00\xC0", 6)));
  EXPECT_EQ(s24.channels[0], (std::vector<double>{0.5, -0.5}));

  std::string d32;
  put32(d32, 0x20000000u);
  const auto s32 = parse(wav_bytes(1, 1, 8000, 32, d32));
  EXPECT_EQ(s32.channels[0], (std::vector<double>{0.25}));

  std::string df;
  put32(df, 0x3F400000u);  // 0.75f
  const auto f32 = parse(wav_bytes(3, 1, 8000, 32, df));
  EXPECT_EQ(f32.encoding, WavEncoding::kFloat32);
  EXPECT_EQ(f32.channels[0], (std::vector<double>{0.75}));
}

TEST(WavRead, Extensible) {
  std::string data;
  put16(data, 8192);
  const auto a = parse(wav_bytes(1, 1, 44100, 16, data, true));
  EXPECT_EQ(a.sample_rate, 44100);
  EXPECT_EQ(a.channels[0], (std::vector<double>{0.25}));
}

TEST(WavRead, RejectsMalformedInput) {
  std::string data;
  put16(data, 1);
  const auto good = wav_bytes(1, 1, 16000, 16, data);
  EXPECT_THROW(parse("RIFX" + good.substr(4)), FormatError);
  EXPECT_THROW(parse(good.substr(0, 20)), FormatError);
  EXPECT_THROW(parse(wav_bytes(2, 1, 16000, 16, data)), FormatError);  // ADPCM
  EXPECT_THROW(parse(wav_bytes(1, 1, 16000, 12, data)), FormatError);
  EXPECT_THROW(parse(""), FormatError);
  EXPECT_THROW(read_wav(std::filesystem::path("/nonexistent/file.wav")), std::exception);
}

TEST(WavRoundTrip, EveryEncoding) {
  const std::vector<double> ch0 = {0.0, 0.5, -0.5, 0.25, -1.0, 0.125};
  const std::vector<double> ch1 = {0.75, -0.25, 0.0, 0.5, 0.375, -0.125};
  for (auto enc : {WavEncoding::kPcm8, WavEncoding::kPcm16, WavEncoding::kPcm24,
                   WavEncoding::kPcm32, WavEncoding::kFloat32}) {
    WavAudio a{22050, enc, {ch0, ch1}};
    std::stringstream buf;
    write_wav(buf, a);
    const auto b = read_wav(buf);
    EXPECT_EQ(b.sample_rate, 22050);
    EXPECT_EQ(b.encoding, enc);
    EXPECT_EQ(b.channels, a.channels);  // all values are exact in every format
  }
}

TEST(WavWrite, IntegerEncodingsClip) {
  WavAudio a{16000, WavEncoding::kPcm16, {{2.0, -3.0}}};
  std::stringstream buf;
  write_wav(buf, a);
  const auto b = read_wav(buf);
  EXPECT_DOUBLE_EQ(b.channels[0][0], 32767.0 / 32768.0);
  EXPECT_DOUBLE_EQ(b.channels[0][1], -1.0);
}

TEST(WavWrite, MonoFileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "cqfb_wav_test.wav";
  write_wav(path, Signal({0.5, -0.25, 0.0}, 16000), WavEncoding::kPcm16);
  const auto mono = mixdown(read_wav(path));
  std::filesystem::remove(path);
  ASSERT_EQ(mono.size(), 3u);
  EXPECT_DOUBLE_EQ(mono[0], 0.5);
  EXPECT_DOUBLE_EQ(mono[1], -0.25);
}

}  // namespace
}  // namespace cqfb::io
