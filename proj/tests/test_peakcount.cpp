#include <doctest.h>

#include "peaks/oracle.hpp"
#include "peaks/peakcount.hpp"

using namespace peaks;

namespace {
BigInt factorial(int n)
{
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}
}  // namespace

TEST_CASE("examples")
{
    const auto f = fTable(6, 12);
    CHECK(f(0, 5) == 16);
    CHECK(f(1, 3) == 2);
    CHECK(f(2, 4) == 0);
    CHECK(f(7, 5) == 0);
    CHECK(f(1, 40) == 0);
    CHECK(fOneClosed(1) == 0);
    CHECK(fOneClosed(2) == 0);
    CHECK(fOneClosed(3) == 2);
    CHECK(fOneClosed(4) == 16);
    CHECK(fOneClosed(10) == 128512);
    CHECK(fFromDistribution(4, 1) == 16);
    for (int n = 1; n <= 12; ++n) CHECK(fFromDistribution(n, 0) == (BigInt(1) << (n - 1)));
}

TEST_CASE("f(1,n) sequence")
{
    const std::vector<BigInt> prefix{2, 16, 88, 416, 1824};
    const auto f = fTable(1, 20);
    for (int n = 3; n <= 7; ++n) CHECK(fOneClosed(n) == prefix[static_cast<std::size_t>(n - 3)]);
    for (int n = 1; n <= 20; ++n) CHECK(fOneClosed(n) == f(1, n));
}

TEST_CASE("row sums and the first moment")
{
    const auto f = fTable(7, 13);
    for (int n = 1; n <= 13; ++n) {
        BigInt sum = 0;
        BigInt moment = 0;
        for (int s = 0; s <= 7; ++s) {
            sum += f(s, n);
            moment += s * f(s, n);
            CHECK(f(s, n) == fFromDistribution(n, s));
        }
        CHECK(sum == factorial(n));
        if (n >= 2) CHECK(3 * moment == factorial(n) * (n - 2));
    }
}

TEST_CASE("table matches the oracle, n <= 9")
{
    OracleConfig cfg;
    cfg.kernel = simd::bestKernel();
    const auto f = fTable(4, 9);
    for (int n = 1; n <= 9; ++n) {
        for (int s = 0; s <= 4; ++s) CHECK(f(s, n) == bruteCountByPeakNumber(s, n, cfg));
    }
}
