#include <doctest.h>

#include "peaks/counting.hpp"
#include "peaks/genfunc.hpp"

using namespace peaks;

TEST_CASE("generating function of {2,5}")
{
    const auto gf = generatingFunction(PeakSet{2, 5});
    CHECK(gf.denomExponent == 5);
    CHECK(gf.numeratorString() == "80x^6 - 240x^7 + 288x^8 - 128x^9");
    // 16 x^6 (1-x)(5 - 10x + 8x^2)
    for (int x = -3; x <= 3; ++x) {
        BigInt lhs = 0;
        BigInt xp = 1;
        for (int k = 0; k <= 9; ++k) {
            if (gf.numerator.count(k)) lhs += gf.numerator.at(k) * xp;
            xp *= x;
        }
        BigInt x6 = 1;
        for (int k = 0; k < 6; ++k) x6 *= x;
        CHECK(lhs == 16 * x6 * (1 - x) * (5 - 10 * x + 8 * x * x));
    }
}

TEST_CASE("small generating functions")
{
    const auto g2 = generatingFunction(PeakSet{2});
    CHECK(g2.denomExponent == 2);
    CHECK(g2.numeratorString() == "2x^3");
    CHECK_THROWS_AS(generatingFunction(PeakSet{}), std::invalid_argument);
    CHECK_THROWS_AS(generatingFunction(PeakSet{2, 3}), std::invalid_argument);

    const auto e = seriesExpand(emptySetGeneratingFunction(), 20);
    for (int n = 1; n <= 20; ++n) CHECK(e[static_cast<std::size_t>(n - 1)] == (BigInt(1) << (n - 1)));
}

TEST_CASE("series coefficients are the counts")
{
    for (const auto& s : admissibleSets(8)) {
        const auto series = seriesExpand(generatingFunction(s), 30);
        REQUIRE(series.size() == 30);
        for (int n = 1; n <= 30; ++n) {
            CAPTURE(s.toString());
            CHECK(series[static_cast<std::size_t>(n - 1)] == countPermutations(s, n));
        }
    }
}

TEST_CASE("recurrence")
{
    CHECK(recurrenceCoefficients(5) == std::vector<BigInt>{10, -40, 80, -80, 32});
    CHECK(recurrenceCoefficients(1) == std::vector<BigInt>{2});
    CHECK(recurrenceCheck(PeakSet{2, 5}, 30));
    for (const auto& s : admissibleSets(9)) CHECK(recurrenceCheck(s, 30));

    std::vector<BigInt> a;
    for (int n = 1; n <= 30; ++n) a.push_back(countPermutations(PeakSet{2, 5}, n));
    CHECK(recurrenceHolds(a, 5, 30));
    a[19] += 1;
    CHECK_FALSE(recurrenceHolds(a, 5, 30));
}
