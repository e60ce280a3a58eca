#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cqfb/signal.hpp"

namespace cqfb {

/// Feature matrices with class labels. All matrices must share bin count and
/// bin frequencies.
class LabeledFeatureSet {
 public:
  struct Entry {
    TimeFrequencyMatrix features;
    std::string label;
  };

  void add(TimeFrequencyMatrix features, std::string label);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t n_bins() const noexcept;
  std::vector<double> bin_frequencies() const;
  /// Distinct labels in first-seen order.
  std::vector<std::string> labels() const;

 private:
  std::vector<Entry> entries_;
};

enum class FRatioPooling {
  kFrames,      ///< every frame of every utterance is one observation
  kUtterances,  ///< each utterance contributes its per-bin mean
};

/// Per bin, (mu_t - mu_r)^2 / (var_t + var_r) with population variances; a
/// denominator below 1e-12 yields 0. Throws std::invalid_argument when a label
/// is missing or has fewer than two observations.
std::vector<double> f_ratio(const LabeledFeatureSet& set, const std::string& target,
                            const std::string& reference,
                            FRatioPooling pooling = FRatioPooling::kFrames);

/// K x K counts, rows = true class, columns = predicted class.
class ContingencyMatrix {
 public:
  explicit ContingencyMatrix(std::vector<std::vector<std::uint64_t>> counts);

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t at(std::size_t truth, std::size_t predicted) const {
    return counts_[truth][predicted];
  }
  std::uint64_t row_total(std::size_t truth) const;
  std::uint64_t total() const;

 private:
  std::vector<std::vector<std::uint64_t>> counts_;
};

/// Unweighted average recall, (1/K) sum_i A_ii / sum_j A_ij.
double uar(const ContingencyMatrix& c);
/// trace / total.
double accuracy(const ContingencyMatrix& c);

}  // namespace cqfb
