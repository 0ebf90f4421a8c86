#include <bit>

#include "isocut/kernels.hpp"

namespace isocut::kernels::scalar {

void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < masks.size(); ++i) {
    const std::uint64_t set = masks[i];
    std::uint64_t bits = set;
    std::uint32_t sum = 0;
    while (bits != 0) {
      const int v = std::countr_zero(bits);
      sum += static_cast<std::uint32_t>(std::popcount(adjacency[v] & set));
      bits &= bits - 1;
    }
    out[i] = sum;
  }
}

} // namespace isocut::kernels::scalar
