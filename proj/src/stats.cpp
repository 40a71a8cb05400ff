#include "spiro/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spiro/error.hpp"

namespace spiro {

void MomentAccumulator::push(double x) {
  if (n_ == 0) {
    min_ = max_ = x;
  } else {
    min_ = std::min(min_, x);
    max_ = std::max(max_, x);
  }
  const double n1 = static_cast<double>(n_);
  ++n_;
  const double n = static_cast<double>(n_);
  const double delta = x - mean_;
  const double delta_n = delta / n;
  const double delta_n2 = delta_n * delta_n;
  const double term1 = delta * delta_n * n1;
  mean_ += delta_n;
  m4_ += term1 * delta_n2 * (n * n - 3 * n + 3) + 6 * delta_n2 * m2_ - 4 * delta_n * m3_;
  m3_ += term1 * delta_n * (n - 2) - 3 * delta_n * m2_;
  m2_ += term1;
}

void MomentAccumulator::merge(const MomentAccumulator& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  const double delta2 = delta * delta;
  const double delta3 = delta2 * delta;
  const double delta4 = delta2 * delta2;

  const double m2 = m2_ + other.m2_ + delta2 * na * nb / n;
  const double m3 = m3_ + other.m3_ + delta3 * na * nb * (na - nb) / (n * n) +
                    3.0 * delta * (na * other.m2_ - nb * m2_) / n;
  const double m4 = m4_ + other.m4_ +
                    delta4 * na * nb * (na * na - na * nb + nb * nb) / (n * n * n) +
                    6.0 * delta2 * (na * na * other.m2_ + nb * nb * m2_) / (n * n) +
                    4.0 * delta * (na * other.m3_ - nb * m3_) / n;

  mean_ = (na * mean_ + nb * other.mean_) / n;
  m2_ = m2;
  m3_ = m3;
  m4_ = m4;
  n_ += other.n_;
  min_ = std::min(min_, other.min_);
  max_ = std::max(max_, other.max_);
}

SampleSummary MomentAccumulator::summary() const {
  if (n_ == 0) throw EmptySample("summary of an empty sample");
  SampleSummary s;
  const double n = static_cast<double>(n_);
  s.count = n_;
  s.mean = mean_;
  s.variance = n_ > 1 ? m2_ / (n - 1.0) : 0.0;
  if (m2_ > 0.0) {
    s.skewness = std::sqrt(n) * m3_ / std::pow(m2_, 1.5);
    s.excess_kurtosis = n * m4_ / (m2_ * m2_) - 3.0;
  }
  s.min = min_;
  s.max = max_;
  return s;
}

SampleSummary summarize(std::span<const double> samples) {
  MomentAccumulator acc;
  for (double x : samples) acc.push(x);
  return acc.summary();
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_pdf(double x) {
  return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

double ks_statistic_normal(std::span<const double> samples) {
  if (samples.empty()) throw EmptySample("KS statistic of an empty sample");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double cdf = normal_cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - cdf, cdf - static_cast<double>(i) / n});
  }
  return std::min(d, 1.0);
}

double HistogramData::density(std::size_t bin) const {
  return static_cast<double>(counts.at(bin)) / (static_cast<double>(total) * width(bin));
}

HistogramData histogram(std::span<const double> samples, std::size_t bins,
                        HistogramNormalization mode) {
  if (samples.empty()) throw EmptySample("histogram of an empty sample");
  if (bins == 0) throw EmptySample("histogram needs at least one bin");
  const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
  double lo = *lo_it;
  double hi = *hi_it;
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  HistogramData h;
  h.normalization = mode;
  h.total = samples.size();
  h.counts.assign(bins, 0);
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges.back() = hi;
  for (double x : samples) {
    auto bin = static_cast<std::size_t>((x - lo) / width);
    bin = std::min(bin, bins - 1);
    // floor division can land one bin off near an edge
    while (bin > 0 && x < h.edges[bin]) --bin;
    while (bin + 1 < bins && x >= h.edges[bin + 1]) ++bin;
    ++h.counts[bin];
  }
  return h;
}

NormalityReport normality_check(std::span<const double> samples,
                                const NormalityThresholds& thresholds) {
  if (samples.size() < kMinNormalitySample) {
    throw SampleTooSmall("normality check needs at least " +
                         std::to_string(kMinNormalitySample) + " samples, got " +
                         std::to_string(samples.size()));
  }
  const SampleSummary s = summarize(samples);
  NormalityReport r;
  r.count = s.count;
  r.ks_statistic = ks_statistic_normal(samples);
  r.mean = s.mean;
  r.variance = s.variance;
  r.skewness = s.skewness;
  r.excess_kurtosis = s.excess_kurtosis;
  r.ks_pass = r.ks_statistic < thresholds.ks;
  r.mean_pass = std::abs(r.mean) < thresholds.mean;
  r.variance_pass = std::abs(r.variance - 1.0) < thresholds.variance;
  r.skewness_pass = std::abs(r.skewness) < thresholds.skewness;
  return r;
}

}  // namespace spiro
