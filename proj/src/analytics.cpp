#include "spiro/analytics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <string>

#include "spiro/error.hpp"

namespace spiro {

namespace {

// Profiles of RSC_2 and of RSC_3 for each link, taken from built graphs.
struct ReferenceProfiles {
  EdgeProfile edge2;
  VertexProfile vertex2;
  std::array<EdgeProfile, 3> edge3;
  std::array<VertexProfile, 3> vertex3;
};

const ReferenceProfiles& reference_profiles() {
  static const ReferenceProfiles refs = [] {
    ReferenceProfiles r;
    const SpiroChain two = initial_chain(2);
    r.edge2 = edge_profile(two.graph());
    r.vertex2 = vertex_profile(two.graph());
    for (LinkType l : kAllLinks) {
      const SpiroChain three = grow(two, l);
      r.edge3[static_cast<std::size_t>(l)] = edge_profile(three.graph());
      r.vertex3[static_cast<std::size_t>(l)] = vertex_profile(three.graph());
    }
    return r;
  }();
  return refs;
}

void require_n(std::size_t n) {
  if (n < 2) throw InvalidN("analytics need n >= 2, got " + std::to_string(n));
}

constexpr double kDeterministicTolerance = 1e-12;

}  // namespace

double ChainCoefficients::value_from_counts(
    const std::array<std::uint64_t, 3>& counts) const noexcept {
  return ti2 + static_cast<double>(counts[0]) * alpha[0] +
         static_cast<double>(counts[1]) * alpha[1] + static_cast<double>(counts[2]) * alpha[2];
}

ChainCoefficients coefficients(const IndexSpec& spec, const LinkProbabilities& probs) {
  const ReferenceProfiles& refs = reference_profiles();
  ChainCoefficients c;
  c.kind = spec.kind();
  c.probs = probs;

  std::array<double, 3> ti3{};
  if (spec.kind() == IndexKind::Edge) {
    c.ti2 = evaluate_from_profile(spec, refs.edge2);
    for (std::size_t i = 0; i < 3; ++i) ti3[i] = evaluate_from_profile(spec, refs.edge3[i]);
  } else {
    c.ti2 = evaluate_from_profile(spec, refs.vertex2);
    for (std::size_t i = 0; i < 3; ++i) ti3[i] = evaluate_from_profile(spec, refs.vertex3[i]);
  }
  for (std::size_t i = 0; i < 3; ++i) c.alpha[i] = ti3[i] - c.ti2;

  const double alpha_meta = c.alpha[1];
  const double spread = c.alpha[0] - alpha_meta;
  const double magnitude = std::max({std::abs(c.alpha[0]), std::abs(c.alpha[1]), 1e-300});
  c.deterministic = spec.kind() == IndexKind::Vertex ||
                    (std::abs(spread) <= kDeterministicTolerance * magnitude &&
                     c.alpha[1] == c.alpha[2]);

  if (c.deterministic) {
    c.alpha = {alpha_meta, alpha_meta, alpha_meta};
    c.alpha_bar = alpha_meta;
    c.beta = alpha_meta * alpha_meta;
    c.variance_rate = 0.0;
  } else {
    const auto& p = probs.values();
    c.alpha_bar = p[0] * c.alpha[0] + p[1] * c.alpha[1] + p[2] * c.alpha[2];
    c.beta = p[0] * c.alpha[0] * c.alpha[0] + p[1] * c.alpha[1] * c.alpha[1] +
             p[2] * c.alpha[2] * c.alpha[2];
    c.variance_rate = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      const double d = c.alpha[i] - c.alpha_bar;
      c.variance_rate += p[i] * d * d;
    }
  }
  c.C = c.alpha[1];
  c.A = c.ti2 - 2.0 * c.C;
  c.B = c.alpha[0] - c.alpha[1];
  return c;
}

double expected_value(const ChainCoefficients& c, std::size_t n) {
  require_n(n);
  return c.ti2 + c.alpha_bar * static_cast<double>(n - 2);
}

double variance(const ChainCoefficients& c, std::size_t n) {
  require_n(n);
  return c.variance_rate * static_cast<double>(n - 2);
}

double second_moment(const ChainCoefficients& c, std::size_t n) {
  require_n(n);
  const double steps = static_cast<double>(n - 2);
  const double cross = n >= 3 ? static_cast<double>(n - 3) * steps : 0.0;
  return c.ti2 * c.ti2 + (2.0 * c.alpha_bar * c.ti2 + c.beta) * steps +
         cross * c.alpha_bar * c.alpha_bar;
}

double expected_value(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs) {
  return expected_value(coefficients(spec, probs), n);
}

double variance(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs) {
  return variance(coefficients(spec, probs), n);
}

double second_moment(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs) {
  return second_moment(coefficients(spec, probs), n);
}

double DiscreteDistribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) m += pmf[i] * support[i];
  return m;
}

double DiscreteDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < support.size(); ++i) {
    const double d = support[i] - m;
    v += pmf[i] * d * d;
  }
  return v;
}

std::vector<double> binomial_pmf(std::uint64_t trials, double p) {
  std::vector<double> pmf(trials + 1, 0.0);
  if (p <= 0.0) {
    pmf.front() = 1.0;
    return pmf;
  }
  if (p >= 1.0) {
    pmf.back() = 1.0;
    return pmf;
  }
  const double nn = static_cast<double>(trials);
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double log_n_fact = std::lgamma(nn + 1.0);
  for (std::uint64_t k = 0; k <= trials; ++k) {
    const double kk = static_cast<double>(k);
    const double log_choose =
        log_n_fact - std::lgamma(kk + 1.0) - std::lgamma(nn - kk + 1.0);
    pmf[k] = std::exp(log_choose + kk * log_p + (nn - kk) * log_q);
  }
  return pmf;
}

DiscreteDistribution exact_distribution(const ChainCoefficients& c, std::size_t n) {
  require_n(n);
  DiscreteDistribution d;
  if (c.deterministic) {
    d.support = {expected_value(c, n)};
    d.pmf = {1.0};
    return d;
  }
  const std::uint64_t trials = n - 2;
  const std::vector<double> pmf = binomial_pmf(trials, c.probs.ortho());
  const double base = c.ti2 + c.alpha[1] * static_cast<double>(trials);
  d.support.resize(trials + 1);
  d.pmf.resize(trials + 1);
  d.ortho_count.resize(trials + 1);
  for (std::uint64_t k = 0; k <= trials; ++k) {
    // ascending in value: k increasing when B > 0, decreasing otherwise
    const std::uint64_t kk = c.B > 0.0 ? k : trials - k;
    d.support[k] = base + c.B * static_cast<double>(kk);
    d.pmf[k] = pmf[kk];
    d.ortho_count[k] = kk;
  }
  return d;
}

DiscreteDistribution exact_distribution(const IndexSpec& spec, std::size_t n,
                                        const LinkProbabilities& probs) {
  return exact_distribution(coefficients(spec, probs), n);
}

double mgf(const ChainCoefficients& c, std::size_t n, double t) {
  require_n(n);
  const auto& p = c.probs.values();
  double peak = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 3; ++i) {
    if (p[i] > 0.0) peak = std::max(peak, t * c.alpha[i]);
  }
  double scaled = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (p[i] > 0.0) scaled += p[i] * std::exp(t * c.alpha[i] - peak);
  }
  const double log_step = peak + std::log(scaled);
  const double log_m = t * c.ti2 + static_cast<double>(n - 2) * log_step;
  if (!(log_m < std::log(DBL_MAX))) {
    throw Overflow("moment generating function exceeds the double range at t = " +
                   std::to_string(t));
  }
  return std::exp(log_m);
}

double mgf(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs, double t) {
  return mgf(coefficients(spec, probs), n, t);
}

double standardize(double value, const ChainCoefficients& c, std::size_t n) {
  const double v = variance(c, n);
  if (!(v > 0.0)) {
    throw DegenerateVariance("variance is zero (deterministic index or n = 2); "
                             "standardization is undefined");
  }
  return (value - expected_value(c, n)) / std::sqrt(v);
}

double standardize(double value, const IndexSpec& spec, std::size_t n,
                   const LinkProbabilities& probs) {
  return standardize(value, coefficients(spec, probs), n);
}

std::vector<double> martingale_transform(std::span<const double> trajectory,
                                         const ChainCoefficients& c) {
  std::vector<double> m(trajectory.size());
  for (std::size_t j = 0; j < trajectory.size(); ++j) {
    m[j] = trajectory[j] - c.alpha_bar * static_cast<double>(j);
  }
  return m;
}

std::vector<double> martingale_transform(std::span<const double> trajectory,
                                         const IndexSpec& spec,
                                         const LinkProbabilities& probs) {
  return martingale_transform(trajectory, coefficients(spec, probs));
}

ExpectationOrdering compare_expectations(std::size_t n, const LinkProbabilities& probs) {
  require_n(n);
  ExpectationOrdering r;
  r.n = n;
  for (std::size_t i = 0; i < r.expected.size(); ++i) {
    r.expected[i] = expected_value(registry_lookup(ExpectationOrdering::kNames[i]), n, probs);
  }
  for (std::size_t i = 0; i < r.holds.size(); ++i) {
    r.holds[i] = r.expected[i] <= r.expected[i + 1];
  }
  return r;
}

}  // namespace spiro
