#include <gtest/gtest.h>

#include <random>

#include "cqfb/analysis.hpp"
#include "oracles.hpp"

namespace cqfb {
namespace {

TimeFrequencyMatrix one_bin(std::vector<double> values, bool signed_values = true) {
  const std::size_t n = values.size();
  TimeFrequencyMatrix::Flags flags;
  flags.normalized = signed_values;
  return TimeFrequencyMatrix(std::move(values), n, {100.0}, 64, 16000, Representation::kCqt, flags);
}

TimeFrequencyMatrix two_bins(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> v(a);
  v.insert(v.end(), b.begin(), b.end());
  TimeFrequencyMatrix::Flags flags;
  flags.normalized = true;
  return TimeFrequencyMatrix(std::move(v), a.size(), {100.0, 200.0}, 64, 16000,
                             Representation::kCqt, flags);
}

TEST(LabeledFeatureSet, LabelsInFirstSeenOrderAndBinCheck) {
  LabeledFeatureSet set;
  set.add(one_bin({1, 2}), "sad");
  set.add(one_bin({1, 2}), "neutral");
  set.add(one_bin({3, 4}), "sad");
  EXPECT_EQ(set.labels(), (std::vector<std::string>{"sad", "neutral"}));
  EXPECT_EQ(set.n_bins(), 1u);
  TimeFrequencyMatrix other({1, 2}, 2, {150.0}, 64, 16000, Representation::kCqt);
  EXPECT_THROW(set.add(other, "x"), std::invalid_argument);
}

TEST(FRatio, TwoClassFormula) {
  LabeledFeatureSet set;
  set.add(one_bin({-1.0, 1.0}), "t");  // mean 0, variance 1
  set.add(one_bin({1.0, 3.0}), "r");   // mean 2, variance 1
  EXPECT_EQ(f_ratio(set, "t", "r"), std::vector<double>{2.0});
}

TEST(FRatio, IdenticalPooledDataIsZero) {
  LabeledFeatureSet set;
  set.add(two_bins({1, 2, 3}, {5, 5, 5}), "a");
  set.add(two_bins({3, 2, 1}, {5, 5, 5}), "b");
  const auto f = f_ratio(set, "a", "b");
  EXPECT_EQ(f, (std::vector<double>{0.0, 0.0}));  // second bin has a zero denominator
}

TEST(FRatio, PoolsFramesAcrossUtterances) {
  LabeledFeatureSet set;
  set.add(one_bin({0.0, 2.0}), "t");
  set.add(one_bin({4.0, 6.0}), "t");  // pooled: mean 3, variance 5
  set.add(one_bin({3.0, 5.0}), "r");  // mean 4, variance 1
  EXPECT_DOUBLE_EQ(f_ratio(set, "t", "r")[0], 1.0 / 6.0);
  // Utterance pooling: target means {1, 5}: mean 3 variance 4; reference has
  // a single utterance, which is too few observations.
  EXPECT_THROW(f_ratio(set, "t", "r", FRatioPooling::kUtterances), std::invalid_argument);
  set.add(one_bin({5.0, 7.0}), "r");  // reference means {4, 6}: mean 5, variance 1
  EXPECT_DOUBLE_EQ(f_ratio(set, "t", "r", FRatioPooling::kUtterances)[0], 4.0 / 5.0);
}

TEST(FRatio, MissingLabelThrows) {
  LabeledFeatureSet set;
  set.add(one_bin({1, 2}), "a");
  EXPECT_THROW(f_ratio(set, "a", "nope"), std::invalid_argument);
  EXPECT_THROW(f_ratio(LabeledFeatureSet{}, "a", "b"), std::invalid_argument);
}

TEST(FRatio, MonteCarloMatchesAnalyticValue) {
  LabeledFeatureSet set;
  set.add(one_bin(oracle::gaussian_noise(10000, 101, 0.0, 1.0)), "t");
  set.add(one_bin(oracle::gaussian_noise(10000, 202, 1.0, 1.0)), "r");
  EXPECT_NEAR(f_ratio(set, "t", "r")[0], 0.5, 0.025);
}

TEST(FRatio, SameDistributionNearZero) {
  LabeledFeatureSet set;
  set.add(one_bin(oracle::gaussian_noise(10000, 303)), "t");
  set.add(one_bin(oracle::gaussian_noise(10000, 404)), "r");
  EXPECT_LT(f_ratio(set, "t", "r")[0], 1e-3);
}

TEST(FRatio, SymmetricAndOffsetInvariantExactly) {
  // Dyadic values keep every sum exact, so invariance is bit-for-bit.
  LabeledFeatureSet a, b;
  const std::vector<double> t = {0.5, 1.25, -0.75, 2.0, 0.125};
  const std::vector<double> r = {3.0, 2.5, 4.25, 1.5};
  a.add(one_bin(t), "t");
  a.add(one_bin(r), "r");
  auto shifted = [](std::vector<double> v) {
    for (double& x : v) x += 1024.0;
    return v;
  };
  b.add(one_bin(shifted(t)), "t");
  b.add(one_bin(shifted(r)), "r");
  EXPECT_EQ(f_ratio(a, "t", "r"), f_ratio(a, "r", "t"));
  EXPECT_EQ(f_ratio(a, "t", "r"), f_ratio(b, "t", "r"));
}

TEST(FRatio, SymmetricOnRandomData) {
  LabeledFeatureSet set;
  set.add(one_bin(oracle::gaussian_noise(500, 1, 0.3, 1.1)), "t");
  set.add(one_bin(oracle::gaussian_noise(700, 2, -0.2, 0.7)), "r");
  EXPECT_EQ(f_ratio(set, "t", "r"), f_ratio(set, "r", "t"));
}

TEST(Contingency, Validation) {
  EXPECT_THROW(ContingencyMatrix(std::vector<std::vector<std::uint64_t>>{{1}}), std::invalid_argument);
  EXPECT_THROW(ContingencyMatrix({{1, 2}, {3}}), std::invalid_argument);
  const ContingencyMatrix c({{8, 2}, {5, 5}});
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.row_total(0), 10u);
  EXPECT_EQ(c.total(), 20u);
}

TEST(Uar, Examples) {
  EXPECT_EQ(uar(ContingencyMatrix({{8, 2}, {5, 5}})), 0.65);
  EXPECT_EQ(uar(ContingencyMatrix({{7, 0, 0}, {0, 3, 0}, {0, 0, 11}})), 1.0);
  EXPECT_EQ(uar(ContingencyMatrix(std::vector<std::vector<std::uint64_t>>(4, {5, 5, 5, 5}))), 0.25);
  EXPECT_THROW(uar(ContingencyMatrix({{1, 0}, {0, 0}})), std::invalid_argument);
}

TEST(Accuracy, Examples) {
  EXPECT_EQ(accuracy(ContingencyMatrix({{8, 2}, {5, 5}})), 0.65);
  EXPECT_EQ(accuracy(ContingencyMatrix({{7, 0}, {0, 3}})), 1.0);
  EXPECT_EQ(accuracy(ContingencyMatrix({{0, 10}, {10, 0}})), 0.0);
  EXPECT_EQ(accuracy(ContingencyMatrix(std::vector<std::vector<std::uint64_t>>(4, {5, 5, 5, 5}))), 0.25);
  EXPECT_THROW(accuracy(ContingencyMatrix({{0, 0}, {0, 0}})), std::invalid_argument);
}

TEST(Uar, EqualsAccuracyOnBalancedRows) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 2 + static_cast<std::size_t>(trial % 5);
    const std::uint64_t per_row = 40;
    std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(k, 0));
    for (auto& row : counts) {
      for (std::uint64_t i = 0; i < per_row; ++i) ++row[rng() % k];
    }
    const ContingencyMatrix c(counts);
    EXPECT_DOUBLE_EQ(uar(c), accuracy(c));
  }
}

TEST(Uar, InvariantToScalingOneRow) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 2 + static_cast<std::size_t>(trial % 4);
    std::vector<std::vector<std::uint64_t>> counts(k, std::vector<std::uint64_t>(k));
    for (auto& row : counts) {
      for (auto& v : row) v = 1 + rng() % 20;
    }
    auto scaled = counts;
    const std::size_t row = rng() % k;
    const std::uint64_t factor = 1 + rng() % 7;
    for (auto& v : scaled[row]) v *= factor;
    EXPECT_EQ(uar(ContingencyMatrix(counts)), uar(ContingencyMatrix(scaled)));
  }
}

}  // namespace
}  // namespace cqfb
