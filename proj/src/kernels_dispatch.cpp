#include "peaks/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace peaks::simd {

std::string_view kernelName(Kernel k) noexcept
{
    switch (k) {
    case Kernel::Scalar: return "scalar";
    case Kernel::Sse2: return "sse2";
    case Kernel::Avx2: return "avx2";
    case Kernel::Neon: return "neon";
    }
    return "unknown";
}

Kernel parseKernel(std::string_view name)
{
    for (Kernel k : {Kernel::Scalar, Kernel::Sse2, Kernel::Avx2, Kernel::Neon}) {
        if (kernelName(k) == name) return k;
    }
    throw std::invalid_argument("unknown kernel '" + std::string(name) + "'");
}

bool kernelAvailable(Kernel k) noexcept
{
    switch (k) {
    case Kernel::Scalar: return true;
#if defined(PEAKS_X86_KERNELS)
    case Kernel::Sse2: return true;
    case Kernel::Avx2: return __builtin_cpu_supports("avx2");
#else
    case Kernel::Sse2:
    case Kernel::Avx2: return false;
#endif
#if defined(PEAKS_NEON_KERNELS)
    case Kernel::Neon: return true;
#else
    case Kernel::Neon: return false;
#endif
    }
    return false;
}

std::vector<Kernel> availableKernels()
{
    std::vector<Kernel> out;
    for (Kernel k : {Kernel::Scalar, Kernel::Sse2, Kernel::Avx2, Kernel::Neon}) {
        if (kernelAvailable(k)) out.push_back(k);
    }
    return out;
}

Kernel bestKernel() noexcept
{
    for (Kernel k : {Kernel::Avx2, Kernel::Neon, Kernel::Sse2}) {
        if (kernelAvailable(k)) return k;
    }
    return Kernel::Scalar;
}

Kernel defaultKernel()
{
    if (const char* env = std::getenv("PEAKS_KERNEL"); env && *env) {
        const Kernel k = parseKernel(env);
        if (!kernelAvailable(k)) {
            throw std::invalid_argument("kernel '" + std::string(env) + "' not available on this CPU");
        }
        return k;
    }
    return bestKernel();
}

void classify(Kernel k, std::span<const std::uint8_t> slots, int n, std::span<ExtremaMasks> out)
{
    if (n < 1 || n > kMaxN) throw std::invalid_argument("classify: n out of range");
    if (slots.size() != out.size() * kSlotBytes) {
        throw std::invalid_argument("classify: slot buffer does not match output size");
    }
    if (!kernelAvailable(k)) {
        throw std::invalid_argument("classify: kernel not available: " + std::string(kernelName(k)));
    }
    switch (k) {
#if defined(PEAKS_X86_KERNELS)
    case Kernel::Sse2: detail::classifySse2(slots.data(), out.size(), n, out.data()); return;
    case Kernel::Avx2: detail::classifyAvx2(slots.data(), out.size(), n, out.data()); return;
#endif
#if defined(PEAKS_NEON_KERNELS)
    case Kernel::Neon: detail::classifyNeon(slots.data(), out.size(), n, out.data()); return;
#endif
    default: detail::classifyScalar(slots.data(), out.size(), n, out.data()); return;
    }
}

}  // namespace peaks::simd
