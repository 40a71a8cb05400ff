#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "spiro/chain.hpp"
#include "spiro/indices.hpp"

namespace spiro {

// Closed-form constants of an index on random spiro chains. alpha[i] is the
// increment TI_{3,i} - TI_2 for link i (ortho, meta, para), read off the
// RSC_2 and RSC_3 profiles. A, B, C give the per-realization identity
//   TI_n = A + B * (#ortho links) + C * n,
// with A = ti2 - 2 C, B = alpha_ortho - alpha_meta, C = alpha_meta. For vertex
// indices B = 0.
struct ChainCoefficients {
  IndexKind kind = IndexKind::Edge;
  LinkProbabilities probs = LinkProbabilities::uniform();
  double ti2 = 0.0;
  std::array<double, 3> alpha{};
  double alpha_bar = 0.0;
  double beta = 0.0;
  // sum_i p_i (alpha_i - alpha_bar)^2, equal to beta - alpha_bar^2 but never
  // negative in floating point.
  double variance_rate = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  bool deterministic = false;

  double increment(LinkType link) const noexcept {
    return alpha[static_cast<std::size_t>(link)];
  }
  /// ti2 + sum_i counts[i] * alpha[i].
  double value_from_counts(const std::array<std::uint64_t, 3>& counts) const noexcept;
};

ChainCoefficients coefficients(const IndexSpec& spec, const LinkProbabilities& probs);

double expected_value(const ChainCoefficients& c, std::size_t n);
double variance(const ChainCoefficients& c, std::size_t n);
double second_moment(const ChainCoefficients& c, std::size_t n);

double expected_value(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs);
double variance(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs);
double second_moment(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs);

// Exact law of TI_n. Atoms are sorted by value; ortho_count[j] is the number
// of ortho links producing atom j (empty for a deterministic index, whose law
// is a single atom).
struct DiscreteDistribution {
  std::vector<double> support;
  std::vector<double> pmf;
  std::vector<std::uint64_t> ortho_count;

  double mean() const;
  double variance() const;
};

/// Binomial(trials, p) probabilities for k = 0..trials.
std::vector<double> binomial_pmf(std::uint64_t trials, double p);

DiscreteDistribution exact_distribution(const ChainCoefficients& c, std::size_t n);
DiscreteDistribution exact_distribution(const IndexSpec& spec, std::size_t n,
                                        const LinkProbabilities& probs);

/// e^{t ti2} (sum_i p_i e^{t alpha_i})^{n-2}; Overflow past the double range.
double mgf(const ChainCoefficients& c, std::size_t n, double t);
double mgf(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs, double t);

/// (value - E) / sqrt(V); DegenerateVariance when V = 0.
double standardize(double value, const ChainCoefficients& c, std::size_t n);
double standardize(double value, const IndexSpec& spec, std::size_t n,
                   const LinkProbabilities& probs);

/// trajectory[j] holds TI at n = j + 2; returns M_n = TI_n - alpha_bar (n - 2).
std::vector<double> martingale_transform(std::span<const double> trajectory,
                                         const ChainCoefficients& c);
std::vector<double> martingale_transform(std::span<const double> trajectory,
                                         const IndexSpec& spec,
                                         const LinkProbabilities& probs);

struct ExpectationOrdering {
  static constexpr std::array<const char*, 5> kNames{
      "randic", "nirmala", "sombor", "first-zagreb", "second-zagreb"};

  std::size_t n = 0;
  std::array<double, 5> expected{};
  // holds[i]: expected[i] <= expected[i + 1]
  std::array<bool, 4> holds{};

  bool all_hold() const noexcept { return holds[0] && holds[1] && holds[2] && holds[3]; }
};

ExpectationOrdering compare_expectations(std::size_t n, const LinkProbabilities& probs);

}  // namespace spiro
