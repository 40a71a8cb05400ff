#include "spiro/kernels.hpp"
#include "spiro/rng.hpp"

namespace spiro::kernels {
namespace {

inline std::uint8_t code_of(std::uint64_t raw, LinkThresholds t) {
  const std::uint64_t m = rng::mantissa53(raw);
  return m < t.ortho ? 0 : (m < t.meta ? 1 : 2);
}

void fill_stream(std::uint64_t seed, std::uint64_t first, std::span<std::uint64_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = rng::at(seed, first + i);
}

void classify(std::span<const std::uint64_t> raw, LinkThresholds t,
              std::span<std::uint8_t> codes) {
  for (std::size_t i = 0; i < raw.size(); ++i) codes[i] = code_of(raw[i], t);
}

LinkCounts count_links(std::span<const std::uint64_t> raw, LinkThresholds t) {
  LinkCounts c{0, 0, 0};
  for (const std::uint64_t r : raw) ++c[code_of(r, t)];
  return c;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &fill_stream, &classify, &count_links};
  return table;
}

}  // namespace spiro::kernels
