#include "spiro/kernels.hpp"
#include "spiro/rng.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define SPIRO_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define SPIRO_HAVE_AVX2_KERNELS 0
#endif

namespace spiro::kernels {

#if SPIRO_HAVE_AVX2_KERNELS
namespace {

#define SPIRO_AVX2 __attribute__((target("avx2")))

// Low 64 bits of a lane-wise 64x64 product built from 32x32->64 multiplies.
SPIRO_AVX2 inline __m256i mullo64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), b),
                                         _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

SPIRO_AVX2 inline __m256i mix64(__m256i z) {
  const __m256i k1 = _mm256_set1_epi64x(static_cast<long long>(0xBF58476D1CE4E5B9ULL));
  const __m256i k2 = _mm256_set1_epi64x(static_cast<long long>(0x94D049BB133111EBULL));
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 30)), k1);
  z = mullo64(_mm256_xor_si256(z, _mm256_srli_epi64(z, 27)), k2);
  return _mm256_xor_si256(z, _mm256_srli_epi64(z, 31));
}

SPIRO_AVX2 void fill_stream(std::uint64_t seed, std::uint64_t first,
                            std::span<std::uint64_t> out) {
  const std::size_t n = out.size();
  std::size_t i = 0;
  const std::uint64_t g = rng::kGamma;
  const std::uint64_t s0 = seed + (first + 1) * g;
  __m256i state = _mm256_set_epi64x(static_cast<long long>(s0 + 3 * g),
                                    static_cast<long long>(s0 + 2 * g),
                                    static_cast<long long>(s0 + g),
                                    static_cast<long long>(s0));
  const __m256i step = _mm256_set1_epi64x(static_cast<long long>(4 * g));
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), mix64(state));
    state = _mm256_add_epi64(state, step);
  }
  for (; i < n; ++i) out[i] = rng::at(seed, first + i);
}

// Lane masks (all-ones when true) for m < ortho and m < meta.
struct LaneMasks {
  __m256i below_ortho;
  __m256i below_meta;
};

SPIRO_AVX2 inline LaneMasks lane_masks(const std::uint64_t* p, __m256i t_ortho,
                                       __m256i t_meta) {
  const __m256i m =
      _mm256_srli_epi64(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)), 11);
  return {_mm256_cmpgt_epi64(t_ortho, m), _mm256_cmpgt_epi64(t_meta, m)};
}

inline std::uint8_t code_of(std::uint64_t raw, LinkThresholds t) {
  const std::uint64_t m = rng::mantissa53(raw);
  return m < t.ortho ? 0 : (m < t.meta ? 1 : 2);
}

SPIRO_AVX2 void classify(std::span<const std::uint64_t> raw, LinkThresholds t,
                         std::span<std::uint8_t> codes) {
  const std::size_t n = raw.size();
  const __m256i t_ortho = _mm256_set1_epi64x(static_cast<long long>(t.ortho));
  const __m256i t_meta = _mm256_set1_epi64x(static_cast<long long>(t.meta));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const LaneMasks mk = lane_masks(raw.data() + i, t_ortho, t_meta);
    const int bo = _mm256_movemask_pd(_mm256_castsi256_pd(mk.below_ortho));
    const int bm = _mm256_movemask_pd(_mm256_castsi256_pd(mk.below_meta));
    for (int lane = 0; lane < 4; ++lane) {
      codes[i + lane] =
          static_cast<std::uint8_t>(2 - ((bo >> lane) & 1) - ((bm >> lane) & 1));
    }
  }
  for (; i < n; ++i) codes[i] = code_of(raw[i], t);
}

SPIRO_AVX2 LinkCounts count_links(std::span<const std::uint64_t> raw, LinkThresholds t) {
  const std::size_t n = raw.size();
  const __m256i t_ortho = _mm256_set1_epi64x(static_cast<long long>(t.ortho));
  const __m256i t_meta = _mm256_set1_epi64x(static_cast<long long>(t.meta));
  __m256i acc_ortho = _mm256_setzero_si256();
  __m256i acc_meta = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const LaneMasks mk = lane_masks(raw.data() + i, t_ortho, t_meta);
    acc_ortho = _mm256_sub_epi64(acc_ortho, mk.below_ortho);
    acc_meta = _mm256_sub_epi64(acc_meta, mk.below_meta);
  }
  alignas(32) std::uint64_t lanes_ortho[4];
  alignas(32) std::uint64_t lanes_meta[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes_ortho), acc_ortho);
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes_meta), acc_meta);
  std::uint64_t below_ortho = lanes_ortho[0] + lanes_ortho[1] + lanes_ortho[2] + lanes_ortho[3];
  std::uint64_t below_meta = lanes_meta[0] + lanes_meta[1] + lanes_meta[2] + lanes_meta[3];
  for (; i < n; ++i) {
    const std::uint64_t m = rng::mantissa53(raw[i]);
    below_ortho += m < t.ortho;
    below_meta += m < t.meta;
  }
  return {below_ortho, below_meta - below_ortho, n - below_meta};
}

#undef SPIRO_AVX2

}  // namespace

const KernelTable* avx2_kernels() {
  static const bool supported = __builtin_cpu_supports("avx2");
  static const KernelTable table{"avx2", &fill_stream, &classify, &count_links};
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_kernels() { return nullptr; }

#endif

}  // namespace spiro::kernels
