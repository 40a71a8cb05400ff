#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace spiro::kernels {

// Inverse-CDF link selection in the integer domain. With m = raw >> 11 and
// u = m * 2^-53, "u < p" is exactly "m < ceil(p * 2^53)", so both thresholds
// are precomputed once and every lane does two 64-bit compares.
//   m < ortho          -> code 0 (ortho)
//   ortho <= m < meta  -> code 1 (meta)
//   otherwise          -> code 2 (para)
struct LinkThresholds {
  std::uint64_t ortho = 0;
  std::uint64_t meta = 0;
};

using LinkCounts = std::array<std::uint64_t, 3>;

struct KernelTable {
  std::string_view name;
  // out[i] = rng::at(seed, first + i)
  void (*fill_stream)(std::uint64_t seed, std::uint64_t first,
                      std::span<std::uint64_t> out);
  // codes[i] = link code of raw[i]; codes.size() >= raw.size()
  void (*classify)(std::span<const std::uint64_t> raw, LinkThresholds t,
                   std::span<std::uint8_t> codes);
  LinkCounts (*count_links)(std::span<const std::uint64_t> raw, LinkThresholds t);
};

const KernelTable& scalar_kernels();

// nullptr when the binary or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

// Best table for this CPU. SPIRO_SIMD=scalar forces the reference kernels.
const KernelTable& active_kernels();

}  // namespace spiro::kernels
