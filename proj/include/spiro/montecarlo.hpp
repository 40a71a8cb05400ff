#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spiro/analytics.hpp"
#include "spiro/chain.hpp"
#include "spiro/indices.hpp"
#include "spiro/kernels.hpp"
#include "spiro/stats.hpp"

namespace spiro {

struct SimulationOptions {
  // 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  const kernels::KernelTable* kernels = nullptr;  // nullptr: active_kernels()
};

// Replications are grouped into fixed blocks of this many; block summaries
// are merged in block order, so results do not depend on the worker count.
inline constexpr std::size_t kReplicationBlock = 256;

struct SimulationResult {
  ChainCoefficients coefficients;
  std::vector<double> values;  // values[r] is replication r
  SampleSummary summary;
};

// Replication r draws its n - 2 links from the stream seeded with
// rng::derive_seed(seed, r), so its value equals
// evaluate(spec, generate(n, probs, rng::derive_seed(seed, r)).graph()).
// Index values are accumulated from link counts and alpha increments in O(n).
SimulationResult simulate(const IndexSpec& spec, std::size_t n, const LinkProbabilities& probs,
                          std::size_t reps, std::uint64_t seed,
                          const SimulationOptions& options = {});

/// simulate() followed by standardize(); DegenerateVariance for zero variance.
std::vector<double> standardized_sample(const IndexSpec& spec, std::size_t n,
                                        const LinkProbabilities& probs, std::size_t reps,
                                        std::uint64_t seed,
                                        const SimulationOptions& options = {});

/// Number of ortho links in each replication, same streams as simulate().
std::vector<std::uint64_t> simulate_ortho_counts(std::size_t n, const LinkProbabilities& probs,
                                                 std::size_t reps, std::uint64_t seed,
                                                 const SimulationOptions& options = {});

// For each step j = 3..n, the mean over trajectories of M_j - M_{j-1}
// (= alpha_{L_j} - alpha_bar); the result is the largest absolute step mean.
// Exactly 0 for deterministic indices.
struct MartingaleResidual {
  double max_abs_mean_increment = 0.0;
  std::vector<double> step_means;  // step_means[j - 3]
  double increment_sd = 0.0;       // sqrt(sum_i p_i (alpha_i - alpha_bar)^2)
  double increment_bound = 0.0;    // 2 * max_i |alpha_i|
};

/// InvalidN for n < 3.
MartingaleResidual martingale_residual_check(const IndexSpec& spec,
                                             const LinkProbabilities& probs, std::size_t n,
                                             std::size_t trajectories, std::uint64_t seed,
                                             const SimulationOptions& options = {});

}  // namespace spiro
