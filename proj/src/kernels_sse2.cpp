#include "peaks/kernels.hpp"

#include <emmintrin.h>

namespace peaks::simd::detail {

// Lane j holds a_{j+1}. Byte shifts give each lane its left and right
// neighbour; values are at most 16, so signed byte compares are exact.
void classifySse2(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept
{
    const unsigned interior = interiorMask(n);
    for (std::size_t p = 0; p < count; ++p) {
        const __m128i v = _mm_loadu_si128(reinterpret_cast<const __m128i*>(slots + p * kSlotBytes));
        const __m128i prev = _mm_slli_si128(v, 1);
        const __m128i next = _mm_srli_si128(v, 1);
        const __m128i peak = _mm_and_si128(_mm_cmpgt_epi8(v, prev), _mm_cmpgt_epi8(v, next));
        const __m128i valley = _mm_and_si128(_mm_cmpgt_epi8(prev, v), _mm_cmpgt_epi8(next, v));
        out[p].peaks = static_cast<std::uint16_t>(static_cast<unsigned>(_mm_movemask_epi8(peak)) & interior);
        out[p].valleys = static_cast<std::uint16_t>(static_cast<unsigned>(_mm_movemask_epi8(valley)) & interior);
    }
}

}  // namespace peaks::simd::detail
