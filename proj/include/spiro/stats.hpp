#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spiro {

struct SampleSummary {
  std::uint64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased; 0 for a single value
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Streaming central moments up to order four. merge() uses the pairwise
// update of Pebay (2008); merging the same partition in the same order is
// bit-reproducible.
class MomentAccumulator {
 public:
  void push(double x);
  void merge(const MomentAccumulator& other);

  std::uint64_t count() const noexcept { return n_; }
  /// EmptySample when nothing has been pushed.
  SampleSummary summary() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double m3_ = 0.0;
  double m4_ = 0.0;
  double min_ = 0.0;
  double max_ = 0.0;
};

SampleSummary summarize(std::span<const double> samples);

double normal_cdf(double x);
double normal_pdf(double x);

/// sup |F_n(x) - Phi(x)| against the standard normal.
double ks_statistic_normal(std::span<const double> samples);

enum class HistogramNormalization { Counts, Density };

struct HistogramData {
  std::vector<double> edges;  // bins + 1, strictly increasing
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  HistogramNormalization normalization = HistogramNormalization::Counts;

  std::size_t bins() const noexcept { return counts.size(); }
  double width(std::size_t bin) const { return edges[bin + 1] - edges[bin]; }
  /// counts / (total * width)
  double density(std::size_t bin) const;
};

/// Uniform bins over [min, max], right-open except the last. A constant
/// sample spans [v - 0.5, v + 0.5]. EmptySample on no data; bins must be >= 1.
HistogramData histogram(std::span<const double> samples, std::size_t bins,
                        HistogramNormalization mode = HistogramNormalization::Counts);

struct NormalityThresholds {
  double ks = 0.03;
  double mean = 0.05;
  double variance = 0.05;
  double skewness = 0.1;
};

struct NormalityReport {
  std::uint64_t count = 0;
  double ks_statistic = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double skewness = 0.0;
  double excess_kurtosis = 0.0;
  bool ks_pass = false;
  bool mean_pass = false;
  bool variance_pass = false;
  bool skewness_pass = false;

  bool all_pass() const noexcept { return ks_pass && mean_pass && variance_pass && skewness_pass; }
};

inline constexpr std::size_t kMinNormalitySample = 100;

/// SampleTooSmall below kMinNormalitySample values.
NormalityReport normality_check(std::span<const double> samples,
                                const NormalityThresholds& thresholds = {});

}  // namespace spiro
