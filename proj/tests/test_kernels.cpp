#include <doctest.h>

#include <vector>

#include "spiro/chain.hpp"
#include "spiro/kernels.hpp"
#include "spiro/rng.hpp"

using namespace spiro;

namespace {

std::vector<const kernels::KernelTable*> all_tables() {
  std::vector<const kernels::KernelTable*> t{&kernels::scalar_kernels()};
  if (const auto* avx = kernels::avx2_kernels()) t.push_back(avx);
  return t;
}

constexpr std::uint64_t kFull = std::uint64_t{1} << 53;

}  // namespace

TEST_CASE("splitmix64 reference values") {
  // first outputs of the stream seeded with 1234567 (published test vector)
  rng::SplitMix64 gen(1234567);
  CHECK(gen() == 6457827717110365317ULL);
  CHECK(gen() == 3203168211198807973ULL);
  CHECK(gen() == 9817491932198370423ULL);
  CHECK(rng::at(1234567, 2) == 9817491932198370423ULL);
}

TEST_CASE("fill_stream matches rng::at on every table") {
  for (const auto* k : all_tables()) {
    CAPTURE(k->name);
    for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 1001u}) {
      for (std::uint64_t first : {0ULL, 1ULL, 7ULL, 123456789ULL}) {
        const std::uint64_t seed = 0xDEADBEEFULL * (len + 1) + first;
        std::vector<std::uint64_t> out(len);
        k->fill_stream(seed, first, out);
        for (std::size_t i = 0; i < len; ++i) REQUIRE(out[i] == rng::at(seed, first + i));
      }
    }
  }
}

TEST_CASE("SIMD kernels are bit-identical to the scalar reference") {
  const auto* avx = kernels::avx2_kernels();
  if (avx == nullptr) {
    MESSAGE("AVX2 not available; equivalence test skipped");
    return;
  }
  const auto& ref = kernels::scalar_kernels();
  rng::SplitMix64 gen(2024);
  const std::vector<kernels::LinkThresholds> thresholds{
      {0, 0}, {0, kFull}, {kFull, kFull}, {kFull / 3, 2 * (kFull / 3)},
      {kFull / 2, kFull / 2}, {1, 2}, {kFull - 1, kFull}};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t len = gen() % 300;
    std::vector<std::uint64_t> raw(len);
    for (auto& r : raw) r = gen();
    std::vector<kernels::LinkThresholds> ts = thresholds;
    const std::uint64_t a = gen() % (kFull + 1), b = gen() % (kFull + 1);
    ts.push_back({std::min(a, b), std::max(a, b)});
    for (const auto& t : ts) {
      std::vector<std::uint8_t> c_ref(len), c_simd(len);
      ref.classify(raw, t, c_ref);
      avx->classify(raw, t, c_simd);
      REQUIRE(c_ref == c_simd);
      REQUIRE(ref.count_links(raw, t) == avx->count_links(raw, t));
    }
  }
}

TEST_CASE("count_links agrees with classify") {
  for (const auto* k : all_tables()) {
    CAPTURE(k->name);
    std::vector<std::uint64_t> raw(1234);
    k->fill_stream(77, 0, raw);
    const auto t = LinkProbabilities(0.2, 0.5, 0.3).thresholds();
    std::vector<std::uint8_t> codes(raw.size());
    k->classify(raw, t, codes);
    kernels::LinkCounts tally{0, 0, 0};
    for (auto c : codes) ++tally[c];
    CHECK(tally == k->count_links(raw, t));
    CHECK(tally[0] + tally[1] + tally[2] == raw.size());
  }
}

TEST_CASE("active kernels are one of the known tables") {
  const auto& k = kernels::active_kernels();
  bool known = &k == &kernels::scalar_kernels() || &k == kernels::avx2_kernels();
  CHECK(known);
}
