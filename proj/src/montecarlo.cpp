#include "spiro/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "spiro/error.hpp"
#include "spiro/rng.hpp"

namespace spiro {

namespace {

constexpr std::size_t kStreamChunk = 4096;

unsigned worker_count(const SimulationOptions& o, std::size_t blocks) {
  unsigned w = o.workers != 0 ? o.workers : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(w, std::max<std::size_t>(blocks, 1)));
}

const kernels::KernelTable& table_of(const SimulationOptions& o) {
  return o.kernels != nullptr ? *o.kernels : kernels::active_kernels();
}

// Runs body(block) for every block in [0, blocks), spread over workers.
void for_each_block(std::size_t blocks, unsigned workers,
                    const std::function<void(std::size_t)>& body) {
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < blocks; b = next++) body(b);
    });
  }
}

kernels::LinkCounts count_stream(const kernels::KernelTable& k, std::uint64_t seed,
                                 std::size_t draws, kernels::LinkThresholds t,
                                 std::vector<std::uint64_t>& buffer) {
  kernels::LinkCounts total{0, 0, 0};
  for (std::size_t first = 0; first < draws; first += kStreamChunk) {
    const std::size_t len = std::min(kStreamChunk, draws - first);
    std::span<std::uint64_t> chunk(buffer.data(), len);
    k.fill_stream(seed, first, chunk);
    const kernels::LinkCounts c = k.count_links(chunk, t);
    for (std::size_t i = 0; i < 3; ++i) total[i] += c[i];
  }
  return total;
}

void require_sim_args(std::size_t n, std::size_t reps) {
  if (n < 2) throw InvalidN("simulation needs n >= 2, got " + std::to_string(n));
  if (reps < 1) throw InvalidN("simulation needs at least one replication");
}

template <typename PerRep>
void run_replications(std::size_t n, const LinkProbabilities& probs, std::size_t reps,
                      std::uint64_t seed, const SimulationOptions& options, PerRep&& per_rep,
                      const std::function<void(std::size_t)>& after_block = {}) {
  const kernels::KernelTable& k = table_of(options);
  const kernels::LinkThresholds t = probs.thresholds();
  const std::size_t draws = n - 2;
  const std::size_t blocks = (reps + kReplicationBlock - 1) / kReplicationBlock;
  for_each_block(blocks, worker_count(options, blocks), [&](std::size_t b) {
    std::vector<std::uint64_t> buffer(std::min(kStreamChunk, std::max<std::size_t>(draws, 1)));
    const std::size_t lo = b * kReplicationBlock;
    const std::size_t hi = std::min(reps, lo + kReplicationBlock);
    for (std::size_t r = lo; r < hi; ++r) {
      per_rep(r, count_stream(k, rng::derive_seed(seed, r), draws, t, buffer));
    }
    if (after_block) after_block(b);
  });
}

}  // namespace

SimulationResult simulate(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs,
                          std::size_t reps, std::uint64_t seed,
                          const SimulationOptions& options) {
  require_sim_args(n, reps);
  SimulationResult result;
  result.coefficients = coefficients(spec, probs);
  result.values.resize(reps);
  const std::size_t blocks = (reps + kReplicationBlock - 1) / kReplicationBlock;
  std::vector<MomentAccumulator> block_moments(blocks);
  const ChainCoefficients& c = result.coefficients;
  run_replications(
      n, probs, reps, seed, options,
      [&](std::size_t r, const kernels::LinkCounts& counts) {
        result.values[r] = c.value_from_counts(counts);
      },
      [&](std::size_t b) {
        const std::size_t lo = b * kReplicationBlock;
        const std::size_t hi = std::min(reps, lo + kReplicationBlock);
        for (std::size_t r = lo; r < hi; ++r) block_moments[b].push(result.values[r]);
      });
  MomentAccumulator total;
  for (const auto& m : block_moments) total.merge(m);
  result.summary = total.summary();
  return result;
}

std::vector<double> standardized_sample(const IndexSpec& spec, std::size_t n,
                                        const LinkProbabilities& probs, std::size_t reps,
                                        std::uint64_t seed, const SimulationOptions& options) {
  const ChainCoefficients c = coefficients(spec, probs);
  if (!(variance(c, n) > 0.0)) {
    throw DegenerateVariance("index '" + spec.name() +
                             "' has zero variance at this n; nothing to standardize");
  }
  SimulationResult sim = simulate(spec, n, probs, reps, seed, options);
  for (double& v : sim.values) v = standardize(v, c, n);
  return std::move(sim.values);
}

std::vector<std::uint64_t> simulate_ortho_counts(std::size_t n, const LinkProbabilities& probs,
                                                 std::size_t reps, std::uint64_t seed,
                                                 const SimulationOptions& options) {
  require_sim_args(n, reps);
  std::vector<std::uint64_t> out(reps);
  run_replications(n, probs, reps, seed, options,
                   [&](std::size_t r, const kernels::LinkCounts& counts) { out[r] = counts[0]; });
  return out;
}

MartingaleResidual martingale_residual_check(const IndexSpec& spec,
                                             const LinkProbabilities& probs, std::size_t n,
                                             std::size_t trajectories, std::uint64_t seed,
                                             const SimulationOptions& options) {
  if (n < 3) throw InvalidN("martingale residuals need n >= 3, got " + std::to_string(n));
  if (trajectories < 1) throw InvalidN("martingale residuals need at least one trajectory");

  const ChainCoefficients c = coefficients(spec, probs);
  MartingaleResidual out;
  out.increment_sd = std::sqrt(c.variance_rate);
  out.increment_bound =
      2.0 * std::max({std::abs(c.alpha[0]), std::abs(c.alpha[1]), std::abs(c.alpha[2])});

  const std::size_t steps = n - 2;
  const kernels::KernelTable& k = table_of(options);
  const kernels::LinkThresholds t = probs.thresholds();
  const std::size_t blocks = (trajectories + kReplicationBlock - 1) / kReplicationBlock;
  // per block: step-major link tallies, summed exactly afterwards
  std::vector<std::vector<std::uint64_t>> tallies(blocks);
  for_each_block(blocks, worker_count(options, blocks), [&](std::size_t b) {
    std::vector<std::uint64_t> tally(3 * steps, 0);
    std::vector<std::uint64_t> raw(steps);
    std::vector<std::uint8_t> codes(steps);
    const std::size_t lo = b * kReplicationBlock;
    const std::size_t hi = std::min(trajectories, lo + kReplicationBlock);
    for (std::size_t r = lo; r < hi; ++r) {
      k.fill_stream(rng::derive_seed(seed, r), 0, raw);
      k.classify(raw, t, codes);
      for (std::size_t j = 0; j < steps; ++j) ++tally[3 * j + codes[j]];
    }
    tallies[b] = std::move(tally);
  });

  std::array<double, 3> centered{};
  if (!c.deterministic) {
    for (std::size_t i = 0; i < 3; ++i) centered[i] = c.alpha[i] - c.alpha_bar;
  }
  out.step_means.resize(steps);
  const double count = static_cast<double>(trajectories);
  for (std::size_t j = 0; j < steps; ++j) {
    std::array<std::uint64_t, 3> links{0, 0, 0};
    for (const auto& tally : tallies) {
      for (std::size_t i = 0; i < 3; ++i) links[i] += tally[3 * j + i];
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < 3; ++i) sum += static_cast<double>(links[i]) * centered[i];
    out.step_means[j] = sum / count;
    out.max_abs_mean_increment = std::max(out.max_abs_mean_increment, std::abs(out.step_means[j]));
  }
  return out;
}

}  // namespace spiro
