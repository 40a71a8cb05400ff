#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "spiro/error.hpp"
#include "spiro/rng.hpp"
#include "spiro/stats.hpp"

using namespace spiro;

namespace {

std::vector<double> normal_draws(std::size_t count, std::uint64_t seed) {
  rng::SplitMix64 gen(seed);
  std::normal_distribution<double> normal;
  std::vector<double> out(count);
  for (auto& x : out) x = normal(gen);
  return out;
}

}  // namespace

TEST_CASE("summary moments") {
  const std::vector<double> xs{1, 2, 3, 4, 10};
  const SampleSummary s = summarize(xs);
  CHECK(s.count == 5);
  CHECK(s.mean == doctest::Approx(4.0));
  CHECK(s.variance == doctest::Approx(12.5));
  CHECK(s.min == 1.0);
  CHECK(s.max == 10.0);
  // population central moments: m2 = 10, m3 = 1584/5 / ... computed by hand
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    m2 += std::pow(x - 4, 2) / 5;
    m3 += std::pow(x - 4, 3) / 5;
    m4 += std::pow(x - 4, 4) / 5;
  }
  CHECK(s.skewness == doctest::Approx(m3 / std::pow(m2, 1.5)));
  CHECK(s.excess_kurtosis == doctest::Approx(m4 / (m2 * m2) - 3));

  const SampleSummary one = summarize(std::vector<double>{3.5});
  CHECK(one.variance == 0.0);
  CHECK(one.mean == 3.5);
  CHECK_THROWS_AS(summarize(std::vector<double>{}), EmptySample);
}

TEST_CASE("merged accumulators match a single pass") {
  const auto xs = normal_draws(3001, 5);
  MomentAccumulator whole;
  for (double x : xs) whole.push(x * 3 + 7);
  MomentAccumulator merged;
  for (std::size_t lo = 0; lo < xs.size(); lo += 256) {
    MomentAccumulator part;
    for (std::size_t i = lo; i < std::min(xs.size(), lo + 256); ++i) part.push(xs[i] * 3 + 7);
    merged.merge(part);
  }
  const auto a = whole.summary(), b = merged.summary();
  CHECK(a.count == b.count);
  CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-13));
  CHECK(a.variance == doctest::Approx(b.variance).epsilon(1e-12));
  CHECK(a.skewness == doctest::Approx(b.skewness).epsilon(1e-9));
  CHECK(a.excess_kurtosis == doctest::Approx(b.excess_kurtosis).epsilon(1e-9));
  CHECK(a.min == b.min);
  CHECK(a.max == b.max);
}

TEST_CASE("normal cdf") {
  CHECK(normal_cdf(0.0) == 0.5);
  CHECK(normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  CHECK(normal_pdf(0.0) == doctest::Approx(1 / std::sqrt(2 * std::numbers::pi)));
}

TEST_CASE("KS statistic") {
  const auto xs = normal_draws(5000, 2718);
  const double ks = ks_statistic_normal(xs);
  CHECK(ks < 0.03);
  CHECK(ks > 0.0);
  const std::vector<double> constant(500, 0.0);
  CHECK(ks_statistic_normal(constant) >= 0.5);
  CHECK(ks_statistic_normal(std::vector<double>(200, 50.0)) <= 1.0);
  // shifted sample is detected
  std::vector<double> shifted = xs;
  for (double& x : shifted) x += 0.2;
  CHECK(ks_statistic_normal(shifted) > 0.05);
}

TEST_CASE("normality check") {
  const auto report = normality_check(normal_draws(5000, 99));
  CHECK(report.count == 5000);
  CHECK(report.all_pass());
  std::vector<double> uniform(5000);
  rng::SplitMix64 gen(1);
  for (double& u : uniform) u = std::sqrt(12.0) * (rng::uniform(gen()) - 0.5);
  const auto flat = normality_check(uniform);
  CHECK_FALSE(flat.ks_pass);
  CHECK_THROWS_AS(normality_check(std::vector<double>(99, 0.0)), SampleTooSmall);
}

TEST_CASE("histogram") {
  {
    const auto h = histogram(std::vector<double>{0, 1, 2, 3}, 2);
    CHECK(h.counts == std::vector<std::uint64_t>{2, 2});
    CHECK(h.edges == std::vector<double>{0, 1.5, 3});
  }
  {
    const auto h = histogram(std::vector<double>{4.0, 4.0, 4.0}, 7);
    std::uint64_t nonempty = 0;
    for (auto c : h.counts) nonempty += c > 0;
    CHECK(nonempty == 1);
    for (std::size_t i = 1; i < h.edges.size(); ++i) CHECK(h.edges[i] > h.edges[i - 1]);
  }
  {
    const auto xs = normal_draws(10007, 3);
    const auto h = histogram(xs, 40, HistogramNormalization::Density);
    std::uint64_t total = 0;
    double area = 0.0;
    for (std::size_t i = 0; i < h.bins(); ++i) {
      total += h.counts[i];
      area += h.density(i) * h.width(i);
    }
    CHECK(total == xs.size());
    CHECK(area == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(h.counts.back() >= 1);  // the maximum lands in the closed last bin
  }
  CHECK_THROWS_AS(histogram(std::vector<double>{}, 3), EmptySample);
  CHECK_THROWS_AS(histogram(std::vector<double>{1.0}, 0), EmptySample);
}
