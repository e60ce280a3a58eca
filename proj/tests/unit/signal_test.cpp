#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "cqfb/signal.hpp"

namespace cqfb {
namespace {

TEST(Signal, StoresSamplesAndRate) {
  Signal s({0.5, -0.25, 0.0, 1.0}, 16000);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.sample_rate(), 16000);
  EXPECT_DOUBLE_EQ(s[1], -0.25);
  EXPECT_DOUBLE_EQ(s.duration(), 4.0 / 16000.0);
  EXPECT_FALSE(s.empty());
}

TEST(Signal, RejectsBadRateAndNonFiniteSamples) {
  EXPECT_THROW(Signal({1.0}, 0), std::invalid_argument);
  EXPECT_THROW(Signal({1.0}, -8000), std::invalid_argument);
  EXPECT_THROW(Signal({std::numeric_limits<double>::quiet_NaN()}, 16000), std::invalid_argument);
  EXPECT_THROW(Signal({std::numeric_limits<double>::infinity()}, 16000), std::invalid_argument);
}

TEST(Representation, NamesRoundTrip) {
  for (auto rep : {Representation::kCqt, Representation::kCwt, Representation::kMfsc,
                   Representation::kStft}) {
    EXPECT_EQ(representation_from_string(to_string(rep)), rep);
  }
  EXPECT_EQ(static_cast<int>(Representation::kCqt), 1);
  EXPECT_EQ(static_cast<int>(Representation::kCwt), 2);
  EXPECT_EQ(static_cast<int>(Representation::kMfsc), 3);
  EXPECT_EQ(static_cast<int>(Representation::kStft), 4);
  EXPECT_THROW(representation_from_string("CQT"), std::invalid_argument);
}

TEST(TimeFrequencyMatrix, RowMajorLayout) {
  TimeFrequencyMatrix m({1, 2, 3, 4, 5, 6}, 3, {100.0, 200.0}, 64, 16000, Representation::kCqt);
  EXPECT_EQ(m.n_bins(), 2u);
  EXPECT_EQ(m.n_frames(), 3u);
  EXPECT_DOUBLE_EQ(m.at(1, 0), 4.0);
  EXPECT_DOUBLE_EQ(m.row(0)[2], 3.0);
}

TEST(TimeFrequencyMatrix, ValidatesShapeAndFrequencies) {
  const auto rep = Representation::kCqt;
  EXPECT_THROW(TimeFrequencyMatrix({1, 2, 3}, 2, {100.0, 200.0}, 64, 16000, rep),
               std::invalid_argument);
  EXPECT_THROW(TimeFrequencyMatrix({1, 2}, 1, {200.0, 100.0}, 64, 16000, rep),
               std::invalid_argument);
  EXPECT_THROW(TimeFrequencyMatrix({1}, 1, {8000.0}, 64, 16000, rep), std::invalid_argument);
  EXPECT_THROW(TimeFrequencyMatrix({1}, 1, {100.0}, 0, 16000, rep), std::invalid_argument);
  EXPECT_NO_THROW(TimeFrequencyMatrix({1}, 1, {0.0}, 64, 16000, Representation::kStft));
}

TEST(TimeFrequencyMatrix, NegativeValuesNeedAFlag) {
  const auto rep = Representation::kMfsc;
  EXPECT_THROW(TimeFrequencyMatrix({-1.0}, 1, {100.0}, 64, 16000, rep), std::invalid_argument);
  EXPECT_NO_THROW(TimeFrequencyMatrix({-1.0}, 1, {100.0}, 64, 16000, rep, {false, true}));
  EXPECT_NO_THROW(TimeFrequencyMatrix({-1.0}, 1, {100.0}, 64, 16000, rep, {true, false}));
}

TEST(TimeFrequencyMatrix, EqualityComparesEverything) {
  TimeFrequencyMatrix a({1, 2}, 2, {100.0}, 64, 16000, Representation::kCqt);
  TimeFrequencyMatrix b({1, 2}, 2, {100.0}, 64, 16000, Representation::kCqt);
  TimeFrequencyMatrix c({1, 2}, 2, {100.0}, 64, 16000, Representation::kCwt);
  EXPECT_EQ(a, b);
  EXPECT_FALSE(a == c);
}

}  // namespace
}  // namespace cqfb
