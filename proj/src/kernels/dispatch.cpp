#include <cstdlib>
#include <string>

#include "isocut/error.hpp"
#include "isocut/kernels.hpp"

namespace isocut::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
  case Isa::scalar:
    return "scalar";
  case Isa::avx2:
    return "avx2";
  case Isa::neon:
    return "neon";
  }
  return "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
  case Isa::scalar:
    return true;
  case Isa::avx2:
#if defined(ISOCUT_HAVE_AVX2_KERNEL)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  case Isa::neon:
#if defined(ISOCUT_HAVE_NEON_KERNEL)
    return true;
#else
    return false;
#endif
  }
  return false;
}

namespace {

Isa detect() {
  if (const char* forced = std::getenv("ISOCUT_SIMD")) {
    const std::string name(forced);
    for (const auto isa : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(isa) && isa_available(isa)) {
        return isa;
      }
    }
  }
  if (isa_available(Isa::avx2)) {
    return Isa::avx2;
  }
  if (isa_available(Isa::neon)) {
    return Isa::neon;
  }
  return Isa::scalar;
}

} // namespace

Isa active_isa() {
  static const Isa chosen = detect();
  return chosen;
}

void inner_degree_sums(Isa isa, std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  if (adjacency.size() > 64) {
    throw DomainError("mask kernels handle at most 64 vertices");
  }
  if (out.size() != masks.size()) {
    throw DomainError("output span must match the number of masks");
  }
  if (!isa_available(isa)) {
    throw UnsupportedError("kernel variant '" + std::string(isa_name(isa)) +
                           "' is not available on this machine");
  }
  switch (isa) {
#if defined(ISOCUT_HAVE_AVX2_KERNEL)
  case Isa::avx2:
    avx2::inner_degree_sums(adjacency, masks, out);
    return;
#endif
#if defined(ISOCUT_HAVE_NEON_KERNEL)
  case Isa::neon:
    neon::inner_degree_sums(adjacency, masks, out);
    return;
#endif
  default:
    scalar::inner_degree_sums(adjacency, masks, out);
    return;
  }
}

} // namespace isocut::kernels
