#include "peaks/kernels.hpp"

namespace peaks::simd::detail {

void classifyScalar(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept
{
    for (std::size_t p = 0; p < count; ++p) {
        const std::uint8_t* a = slots + p * kSlotBytes;
        std::uint16_t peaks = 0;
        std::uint16_t valleys = 0;
        for (int i = 1; i + 1 < n; ++i) {
            if (a[i - 1] < a[i] && a[i] > a[i + 1]) peaks |= static_cast<std::uint16_t>(1u << i);
            if (a[i - 1] > a[i] && a[i] < a[i + 1]) valleys |= static_cast<std::uint16_t>(1u << i);
        }
        out[p] = {peaks, valleys};
    }
}

}  // namespace peaks::simd::detail
