#pragma once

// Peak / valley classification kernels for the brute-force enumerator.
//
// A batch is a contiguous run of 16-byte slots, one permutation per slot:
// bytes 0..n-1 hold a_1..a_n (values 1..n), the rest must be zero. For each
// slot the kernel writes two bit masks where bit (i-1) marks position i.
// Only interior positions 2..n-1 can be set. All variants produce identical
// output; the scalar one is the reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace peaks::simd {

inline constexpr std::size_t kSlotBytes = 16;
inline constexpr int kMaxN = 16;

struct ExtremaMasks {
    std::uint16_t peaks = 0;
    std::uint16_t valleys = 0;

    friend bool operator==(const ExtremaMasks&, const ExtremaMasks&) = default;
};

enum class Kernel { Scalar, Sse2, Avx2, Neon };

std::string_view kernelName(Kernel k) noexcept;
/// Accepts "scalar", "sse2", "avx2", "neon"; throws std::invalid_argument otherwise.
Kernel parseKernel(std::string_view name);

/// Compiled in and supported by the running CPU.
bool kernelAvailable(Kernel k) noexcept;
std::vector<Kernel> availableKernels();
/// Widest available kernel.
Kernel bestKernel() noexcept;
/// bestKernel(), unless PEAKS_KERNEL names an available kernel.
Kernel defaultKernel();

/// Mask with bits for positions 2..n-1.
constexpr std::uint16_t interiorMask(int n) noexcept
{
    if (n < 3) return 0;
    return static_cast<std::uint16_t>(((1u << (n - 1)) - 1u) & ~1u);
}

/// Dispatches to the requested kernel. slots.size() must be
/// out.size() * kSlotBytes and 1 <= n <= kMaxN.
void classify(Kernel k, std::span<const std::uint8_t> slots, int n, std::span<ExtremaMasks> out);

namespace detail {
void classifyScalar(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept;
void classifySse2(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept;
void classifyAvx2(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept;
void classifyNeon(const std::uint8_t* slots, std::size_t count, int n, ExtremaMasks* out) noexcept;
}  // namespace detail

}  // namespace peaks::simd
