#include <arm_neon.h>

#include <bit>

#include "isocut/kernels.hpp"

namespace isocut::kernels::neon {

namespace {

inline uint64x2_t popcount_u64(uint64x2_t v) {
  const uint8x16_t bytes = vcntq_u8(vreinterpretq_u8_u64(v));
  return vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(bytes)));
}

} // namespace

void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  const std::size_t batches = masks.size() / 2;
  const uint64x2_t one = vdupq_n_u64(1);
  const uint64x2_t zero = vdupq_n_u64(0);
  for (std::size_t b = 0; b < batches; ++b) {
    const std::uint64_t* lane = masks.data() + 2 * b;
    const uint64x2_t sets = vld1q_u64(lane);
    uint64x2_t acc = zero;
    std::uint64_t any = lane[0] | lane[1];
    while (any != 0) {
      const int v = std::countr_zero(any);
      any &= any - 1;
      const uint64x2_t counts = popcount_u64(vandq_u64(vdupq_n_u64(adjacency[v]), sets));
      const uint64x2_t member = vandq_u64(vshlq_u64(sets, vdupq_n_s64(-v)), one);
      const uint64x2_t select = vsubq_u64(zero, member);
      acc = vaddq_u64(acc, vandq_u64(counts, select));
    }
    out[2 * b] = static_cast<std::uint32_t>(vgetq_lane_u64(acc, 0));
    out[2 * b + 1] = static_cast<std::uint32_t>(vgetq_lane_u64(acc, 1));
  }
  const std::size_t done = 2 * batches;
  scalar::inner_degree_sums(adjacency, masks.subspan(done), out.subspan(done));
}

} // namespace isocut::kernels::neon
