#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "peaks/kernels.hpp"
#include "peaks/oracle.hpp"

using namespace peaks;
using namespace peaks::simd;

namespace {

std::vector<std::uint8_t> packSlots(const std::vector<std::vector<std::uint8_t>>& perms)
{
    std::vector<std::uint8_t> slots(perms.size() * kSlotBytes, 0);
    for (std::size_t p = 0; p < perms.size(); ++p) {
        std::copy(perms[p].begin(), perms[p].end(), slots.begin() + static_cast<std::ptrdiff_t>(p * kSlotBytes));
    }
    return slots;
}

std::vector<ExtremaMasks> run(Kernel k, const std::vector<std::uint8_t>& slots, int n)
{
    std::vector<ExtremaMasks> out(slots.size() / kSlotBytes);
    classify(k, slots, n, out);
    return out;
}

}  // namespace

TEST_CASE("scalar kernel agrees with the permutation-level definition")
{
    const std::vector<std::vector<std::uint8_t>> perms = {{1, 4, 5, 3, 2, 7, 6}};
    const auto masks = run(Kernel::Scalar, packSlots(perms), 7);
    CHECK(PeakSet::fromMask(masks[0].peaks) == PeakSet{3, 6});
    CHECK(PeakSet::fromMask(masks[0].valleys) == PeakSet{5});
}

TEST_CASE("every available kernel matches scalar on all permutations, n <= 8")
{
    for (int n = 1; n <= 8; ++n) {
        std::vector<std::vector<std::uint8_t>> perms;
        std::vector<std::uint8_t> a(static_cast<std::size_t>(n));
        std::iota(a.begin(), a.end(), std::uint8_t{1});
        do {
            perms.push_back(a);
        } while (std::next_permutation(a.begin(), a.end()));
        const auto slots = packSlots(perms);
        const auto reference = run(Kernel::Scalar, slots, n);
        for (std::size_t i = 0; i < perms.size(); ++i) {
            std::vector<int> v(perms[i].begin(), perms[i].end());
            REQUIRE(PeakSet::fromMask(reference[i].peaks) == peakSetOf(Permutation(v)));
        }
        for (Kernel k : availableKernels()) {
            CAPTURE(kernelName(k));
            CHECK(run(k, slots, n) == reference);
        }
    }
}

TEST_CASE("kernels agree on random permutations up to n = 16, odd batch sizes")
{
    std::mt19937 rng(7);
    for (int n = 1; n <= kMaxN; ++n) {
        for (std::size_t batch : {std::size_t{1}, std::size_t{3}, std::size_t{64}, std::size_t{257}}) {
            std::vector<std::vector<std::uint8_t>> perms(batch);
            for (auto& p : perms) {
                p.resize(static_cast<std::size_t>(n));
                std::iota(p.begin(), p.end(), std::uint8_t{1});
                std::shuffle(p.begin(), p.end(), rng);
            }
            const auto slots = packSlots(perms);
            const auto reference = run(Kernel::Scalar, slots, n);
            for (Kernel k : availableKernels()) {
                CAPTURE(kernelName(k));
                CAPTURE(n);
                CHECK(run(k, slots, n) == reference);
            }
        }
    }
}

TEST_CASE("kernel selection")
{
    CHECK(kernelAvailable(Kernel::Scalar));
    CHECK(kernelAvailable(bestKernel()));
    CHECK(parseKernel("avx2") == Kernel::Avx2);
    CHECK(kernelName(Kernel::Sse2) == "sse2");
    CHECK_THROWS_AS(parseKernel("avx512"), std::invalid_argument);
    CHECK(interiorMask(2) == 0);
    CHECK(interiorMask(4) == 0b0110);
    std::vector<std::uint8_t> slots(kSlotBytes, 0);
    std::vector<ExtremaMasks> out(2);
    CHECK_THROWS_AS(classify(Kernel::Scalar, slots, 4, out), std::invalid_argument);
}
