#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Batched census kernels for the enumeration oracle. Every variant computes
// the same integers; the scalar one is the reference the others are tested
// against.

namespace isocut::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

/// Whether the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Best available variant, unless ISOCUT_SIMD=scalar|avx2|neon names an
/// available one.
Isa active_isa();

/// For each mask X in `masks`: sum over v in X of |adjacency[v] & X|, i.e.
/// twice the number of edges induced by X. Requires at most 64 vertices
/// (adjacency.size() <= 64) and out.size() == masks.size().
void inner_degree_sums(Isa isa, std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);

inline void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                              std::span<const std::uint64_t> masks,
                              std::span<std::uint32_t> out) {
  inner_degree_sums(active_isa(), adjacency, masks, out);
}

namespace scalar {
void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
}

#if defined(ISOCUT_HAVE_AVX2_KERNEL)
namespace avx2 {
void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
}
#endif

#if defined(ISOCUT_HAVE_NEON_KERNEL)
namespace neon {
void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out);
}
#endif

} // namespace isocut::kernels
