#include "peaks/kernels.hpp"

#include <arm_neon.h>

namespace peaks::simd::detail {

namespace {

// Collapses 0x00/0xFF lanes into a 16-bit mask, lane j -> bit j.
inline std::uint16_t movemask(uint8x16_t lanes) noexcept
{
    static const std::uint8_t kWeights[16] = {1, 2, 4, 8, 16, 32, 64, 128,
                                              1, 2, 4, 8, 16, 32, 64, 128};
    const uint8x16_t bits = vandq_u8(lanes, vld1q_u8(kWeights));
    const unsigned lo = vaddv_u8(vget_low_u8(bits));
    const unsigned hi = vaddv_u8(vget_high_u8(bits));
    return static_cast<std::uint16_t>(lo | (hi << 8));
}

}  // namespace

void classifyNeon(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept
{
    const std::uint16_t interior = interiorMask(n);
    const uint8x16_t zero = vdupq_n_u8(0);
    for (std::size_t p = 0; p < count; ++p) {
        const uint8x16_t v = vld1q_u8(slots + p * kSlotBytes);
        const uint8x16_t prev = vextq_u8(zero, v, 15);
        const uint8x16_t next = vextq_u8(v, zero, 1);
        const uint8x16_t peak = vandq_u8(vcgtq_u8(v, prev), vcgtq_u8(v, next));
        const uint8x16_t valley = vandq_u8(vcgtq_u8(prev, v), vcgtq_u8(next, v));
        out[p].peaks = movemask(peak) & interior;
        out[p].valleys = movemask(valley) & interior;
    }
}

}  // namespace peaks::simd::detail
