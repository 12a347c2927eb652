#include "peaks/kernels.hpp"

#include <immintrin.h>

namespace peaks::simd::detail {

// Two slots per register. The 256-bit byte shifts operate within each
// 128-bit half, which is exactly one permutation.
void classifyAvx2(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept
{
    const std::uint32_t interior = interiorMask(n);
    const std::uint32_t pairMask = interior | (interior << 16);
    std::size_t p = 0;
    for (; p + 2 <= count; p += 2) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(slots + p * kSlotBytes));
        const __m256i prev = _mm256_slli_si256(v, 1);
        const __m256i next = _mm256_srli_si256(v, 1);
        const __m256i peak = _mm256_and_si256(_mm256_cmpgt_epi8(v, prev), _mm256_cmpgt_epi8(v, next));
        const __m256i valley = _mm256_and_si256(_mm256_cmpgt_epi8(prev, v), _mm256_cmpgt_epi8(next, v));
        const std::uint32_t pk = static_cast<std::uint32_t>(_mm256_movemask_epi8(peak)) & pairMask;
        const std::uint32_t vl = static_cast<std::uint32_t>(_mm256_movemask_epi8(valley)) & pairMask;
        out[p] = {static_cast<std::uint16_t>(pk), static_cast<std::uint16_t>(vl)};
        out[p + 1] = {static_cast<std::uint16_t>(pk >> 16), static_cast<std::uint16_t>(vl >> 16)};
    }
    if (p < count) classifySse2(slots + p * kSlotBytes, count - p, n, out + p);
}

}  // namespace peaks::simd::detail
