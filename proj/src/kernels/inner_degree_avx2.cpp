#include <immintrin.h>

#include <bit>

#include "isocut/kernels.hpp"

namespace isocut::kernels::avx2 {

namespace {

// Per-lane 64-bit popcount: nibble lookup through vpshufb, then byte sums
// folded into each quadword with vpsadbw.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_nibble = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_nibble);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_nibble);
  const __m256i counts =
      _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

} // namespace

void inner_degree_sums(std::span<const std::uint64_t> adjacency,
                       std::span<const std::uint64_t> masks, std::span<std::uint32_t> out) {
  const std::size_t batches = masks.size() / 4;
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t b = 0; b < batches; ++b) {
    const std::uint64_t* lane = masks.data() + 4 * b;
    const __m256i sets = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(lane));
    __m256i acc = zero;
    std::uint64_t any = lane[0] | lane[1] | lane[2] | lane[3];
    while (any != 0) {
      const int v = std::countr_zero(any);
      any &= any - 1;
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
      const __m256i counts = popcount_epi64(_mm256_and_si256(row, sets));
      const __m256i member =
          _mm256_and_si256(_mm256_srlv_epi64(sets, _mm256_set1_epi64x(v)), one);
      const __m256i select = _mm256_sub_epi64(zero, member);
      acc = _mm256_add_epi64(acc, _mm256_and_si256(counts, select));
    }
    alignas(32) std::uint64_t sums[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(sums), acc);
    for (int k = 0; k < 4; ++k) {
      out[4 * b + k] = static_cast<std::uint32_t>(sums[k]);
    }
  }
  const std::size_t done = 4 * batches;
  scalar::inner_degree_sums(adjacency, masks.subspan(done), out.subspan(done));
}

} // namespace isocut::kernels::avx2
