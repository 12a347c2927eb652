#include <doctest.h>

#include <thread>

#include "peaks/counting.hpp"
#include "peaks/oracle.hpp"
#include "peaks/peakvalley.hpp"

using namespace peaks;

namespace {

OracleConfig fastOracle()
{
    OracleConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    cfg.kernel = simd::bestKernel();
    return cfg;
}

BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// positions from a mask over [2, n-1]
std::vector<int> positionsOf(std::uint32_t mask)
{
    std::vector<int> out;
    for (int i = 0; i < 32; ++i) {
        if (mask & (1u << i)) out.push_back(i + 1);
    }
    return out;
}

}  // namespace

TEST_CASE("examples")
{
    CHECK(pvCount({3}, true, 4) == 3);
    CHECK(pvCount({3}, false, 4) == 3);
    CHECK(pvCount({2, 3}, true, 4) == 5);
    CHECK(pvSingle(3, 4) == 3);
    CHECK(pvPair(4, 5) == 11);
    CHECK(pvTriple(4, 7) == 132);
    CHECK(pvTripleSplit(4, 7) == 132);
    CHECK(pvCount({1, 3}, true, 5) == 0);
    CHECK(pvCount({}, false, 6) == 2);
    CHECK_THROWS_AS(pvPair(2, 5), std::invalid_argument);
    CHECK_THROWS_AS(pvTriple(3, 7), std::invalid_argument);
}

TEST_CASE("closed forms against the oracle, n <= 9")
{
    const auto cfg = fastOracle();
    for (int n = 3; n <= 9; ++n) {
        for (int m = 2; m <= n - 1; ++m) {
            CHECK(pvSingle(m, n) == brutePVCount({m}, true, n, cfg));
            CHECK(pvSingle(m, n) == brutePVCount({m}, false, n, cfg));
        }
        for (int m = 3; m <= n - 1; ++m) {
            CHECK(pvPair(m, n) == brutePVCount({2, m}, true, n, cfg));
        }
        for (int m = 4; m <= n - 3; ++m) {
            CAPTURE(n);
            CAPTURE(m);
            const BigInt brute = brutePVCount({2, m, n - 1}, true, n, cfg);
            CHECK(pvTripleSplit(m, n) == brute);
            CHECK((pvTriple(m, n) == brute) == (2 * m == n + 1));
        }
    }
}

TEST_CASE("one-sided triple form differs from the count off the centre")
{
    CHECK(pvTriple(5, 7 + 1) != pvTripleSplit(5, 8));
    CHECK(pvTripleSplit(5, 8) == pvTripleSplit(4, 8));
    CHECK(pvTriple(5, 9) == pvTripleSplit(5, 9));
}

TEST_CASE("signatureCount against the oracle for every signature, n <= 9")
{
    const auto cfg = fastOracle();
    for (int n = 1; n <= 9; ++n) {
        const auto h = enumerateHistogram(n, cfg);
        const std::uint32_t interior = n >= 3 ? ((1u << (n - 1)) - 1u) & ~1u : 0u;
        BigInt total = 0;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            if ((m & ~interior) != 0) continue;
            for (bool first : {false, true}) {
                const auto p = positionsOf(m);
                const BigInt brute = brutePVCount(p, first, n, cfg);
                REQUIRE(signatureCount(p, first, n) == brute);
                CHECK(pvCount(p, first, n) == brute);
                total += brute;
            }
        }
        CHECK(total == factorial(n));
        CHECK(BigInt(h.visited) == factorial(n));
    }
}

TEST_CASE("valley-first equals peak-first")
{
    for (int n = 3; n <= 14; ++n) {
        const std::uint32_t interior = ((1u << (n - 1)) - 1u) & ~1u;
        for (std::uint32_t m = 2; m < (1u << n); m += 2) {
            if ((m & ~interior) != 0) continue;
            const auto p = positionsOf(m);
            CHECK(signatureCount(p, true, n) == signatureCount(p, false, n));
        }
    }
}

TEST_CASE("polynomial fits")
{
    const auto single = pvPolynomialFit({3}, true);
    CHECK(single.fittedDegree == 2);
    for (int n = 4; n <= 15; ++n) CHECK(single.polynomial(n) == choose(n - 1, 2));

    const auto pair = pvPolynomialFit({2, 4}, true);
    CHECK(pair.fittedDegree == 3);
    for (int n = 5; n <= 15; ++n) CHECK(pair.polynomial(n) == pvPair(4, n));

    CHECK(pvPolynomialFit({2}, true).polynomial(10) == 9);
    CHECK(pvPolynomialFit({2, 3, 5, 6}, false).fittedDegree == 5);
}
