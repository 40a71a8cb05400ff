#include <cstdlib>
#include <string_view>

#include "spiro/kernels.hpp"

namespace spiro::kernels {

const KernelTable& active_kernels() {
  static const KernelTable* selected = [] {
    const char* env = std::getenv("SPIRO_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *selected;
}

}  // namespace spiro::kernels
