#include "cqfb/analysis.hpp"

#include <algorithm>
#include <stdexcept>

namespace cqfb {
namespace {

struct Moments {
  std::size_t count = 0;
  double mean = 0.0;
  double variance = 0.0;
};

// Observations of one bin for one label, in a fixed order.
template <typename Visit>
void for_each_observation(const LabeledFeatureSet& set, const std::string& label,
                          std::size_t bin, FRatioPooling pooling, Visit&& visit) {
  for (const auto& e : set.entries()) {
    if (e.label != label) continue;
    const auto row = e.features.row(bin);
    if (pooling == FRatioPooling::kFrames) {
      for (double v : row) visit(v);
    } else if (!row.empty()) {
      double acc = 0.0;
      for (double v : row) acc += v;
      visit(acc / static_cast<double>(row.size()));
    }
  }
}

// Two-pass mean and population variance.
Moments bin_moments(const LabeledFeatureSet& set, const std::string& label, std::size_t bin,
                    FRatioPooling pooling) {
  Moments m;
  double sum = 0.0;
  for_each_observation(set, label, bin, pooling, [&](double v) {
    sum += v;
    ++m.count;
  });
  if (m.count == 0) return m;
  m.mean = sum / static_cast<double>(m.count);
  double ss = 0.0;
  for_each_observation(set, label, bin, pooling, [&](double v) { ss += (v - m.mean) * (v - m.mean); });
  m.variance = ss / static_cast<double>(m.count);
  return m;
}

}  // namespace

void LabeledFeatureSet::add(TimeFrequencyMatrix features, std::string label) {
  if (!entries_.empty()) {
    const auto ref = entries_.front().features.bin_frequencies();
    const auto got = features.bin_frequencies();
    if (!std::equal(ref.begin(), ref.end(), got.begin(), got.end())) {
      throw std::invalid_argument("LabeledFeatureSet: bin frequencies differ between entries");
    }
  }
  entries_.push_back({std::move(features), std::move(label)});
}

std::size_t LabeledFeatureSet::n_bins() const noexcept {
  return entries_.empty() ? 0 : entries_.front().features.n_bins();
}

std::vector<double> LabeledFeatureSet::bin_frequencies() const {
  if (entries_.empty()) return {};
  const auto f = entries_.front().features.bin_frequencies();
  return {f.begin(), f.end()};
}

std::vector<std::string> LabeledFeatureSet::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) {
    if (std::find(out.begin(), out.end(), e.label) == out.end()) out.push_back(e.label);
  }
  return out;
}

std::vector<double> f_ratio(const LabeledFeatureSet& set, const std::string& target,
                            const std::string& reference, FRatioPooling pooling) {
  if (set.n_bins() == 0) throw std::invalid_argument("f_ratio: empty feature set");
  std::vector<double> out(set.n_bins());
  for (std::size_t b = 0; b < out.size(); ++b) {
    const auto t = bin_moments(set, target, b, pooling);
    const auto r = bin_moments(set, reference, b, pooling);
    if (t.count < 2) throw std::invalid_argument("f_ratio: too few observations for '" + target + "'");
    if (r.count < 2) throw std::invalid_argument("f_ratio: too few observations for '" + reference + "'");
    const double gap = t.mean - r.mean;
    const double denom = t.variance + r.variance;
    out[b] = denom < 1e-12 ? 0.0 : gap * gap / denom;
  }
  return out;
}

ContingencyMatrix::ContingencyMatrix(std::vector<std::vector<std::uint64_t>> counts)
    : counts_(std::move(counts)) {
  if (counts_.size() < 2) throw std::invalid_argument("ContingencyMatrix: need K >= 2");
  for (const auto& row : counts_) {
    if (row.size() != counts_.size()) throw std::invalid_argument("ContingencyMatrix: not square");
  }
}

std::uint64_t ContingencyMatrix::row_total(std::size_t truth) const {
  std::uint64_t s = 0;
  for (auto v : counts_[truth]) s += v;
  return s;
}

std::uint64_t ContingencyMatrix::total() const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += row_total(i);
  return s;
}

double uar(const ContingencyMatrix& c) {
  double acc = 0.0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto total = c.row_total(i);
    if (total == 0) throw std::invalid_argument("uar: class " + std::to_string(i) + " has no samples");
    acc += static_cast<double>(c.at(i, i)) / static_cast<double>(total);
  }
  return acc / static_cast<double>(c.size());
}

double accuracy(const ContingencyMatrix& c) {
  const auto total = c.total();
  if (total == 0) throw std::invalid_argument("accuracy: empty contingency matrix");
  std::uint64_t trace = 0;
  for (std::size_t i = 0; i < c.size(); ++i) trace += c.at(i, i);
  return static_cast<double>(trace) / static_cast<double>(total);
}

}  // namespace cqfb
