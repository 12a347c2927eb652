#include <doctest.h>

#include <random>
#include <thread>

#include "peaks/counting.hpp"
#include "peaks/oracle.hpp"

using namespace peaks;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

OracleConfig fastOracle()
{
    OracleConfig cfg;
    cfg.threads = std::max(1u, std::thread::hardware_concurrency());
    cfg.kernel = simd::bestKernel();
    return cfg;
}

}  // namespace

TEST_CASE("admissibility")
{
    CHECK(isAdmissible(PeakSet{}));
    CHECK(isAdmissible(PeakSet{2, 5}));
    CHECK_FALSE(isAdmissible(PeakSet{2, 3}));
    CHECK_FALSE(isAdmissible(PeakSet{1, 4}));
    CHECK(minN(PeakSet{2, 5}) == 6);
    CHECK(minN(PeakSet{}) == 1);
    const auto sets = admissibleSets(5);
    CHECK(sets.size() == 7);
}

TEST_CASE("admissibleSets agrees with a direct subset filter")
{
    for (int maxPeak = 2; maxPeak <= 10; ++maxPeak) {
        std::vector<PeakSet> expected;
        for (std::uint32_t m = 1; m < (1u << maxPeak); ++m) {
            const auto s = PeakSet::fromMask(m);
            if (isAdmissible(s)) expected.push_back(s);
        }
        std::sort(expected.begin(), expected.end());
        auto got = admissibleSets(maxPeak);
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("countPermutations examples")
{
    CHECK(countPermutations(PeakSet{2, 5}, 8) == 2688);
    CHECK(countPermutations(PeakSet{}, 5) == 16);
    CHECK(countPermutations(PeakSet{2}, 4) == 8);
    CHECK(countPermutations(PeakSet{2, 3}, 8) == 0);
    CHECK(countPermutations(PeakSet{5}, 5) == 0);
    CHECK(peakPolynomial(PeakSet{2, 5})(8) == 84);
}

TEST_CASE("p({2,5};n) for n = 6..14")
{
    const auto p = peakPolynomial(PeakSet{2, 5});
    const auto expected = ints({10, 35, 84, 168, 300, 495, 770, 1144, 1638});
    for (int n = 6; n <= 14; ++n) CHECK(p(n) == expected[static_cast<std::size_t>(n - 6)]);
    const auto q = p.rebased(6);
    CHECK(std::vector<BigInt>(q.coeffs().begin(), q.coeffs().end()) == ints({10, 25, 24, 11, 2}));
}

TEST_CASE("recursion agrees with the oracle on every subset of [2,8] for n <= 9")
{
    const auto cfg = fastOracle();
    for (int n = 1; n <= 9; ++n) {
        const auto table = bruteDistribution(n, cfg);
        for (std::uint32_t m = 0; m < (1u << 8); ++m) {
            if (m & 1u) continue;
            const auto s = PeakSet::fromMask(m);
            CAPTURE(s.toString());
            CAPTURE(n);
            const BigInt brute = table.count(s);
            REQUIRE(countPermutations(s, n) == brute);
            if (n > s.max()) CHECK(isAdmissible(s) == (brute != 0));
        }
    }
}

TEST_CASE("degree, leading coefficient and the zero at max S")
{
    for (const auto& s : admissibleSets(11)) {
        const auto p = peakPolynomial(s);
        CAPTURE(s.toString());
        CHECK(p.degree() == s.max() - 1);
        CHECK(p.rebased(s.max()).coeffs().back() > 0);
        CHECK(p(s.max()) == 0);
    }
    CHECK(peakPolynomial(PeakSet{}) == BinomialPolynomial::constant(1));
    CHECK(peakPolynomial(PeakSet{3, 4}).isZero());
}

TEST_CASE("reversal symmetry of counts")
{
    for (int n = 1; n <= 12; ++n) {
        for (const auto& s : admissibleSets(n - 1)) {
            if (s.max() > n - 1) continue;
            const auto r = s.reflected(n);
            if (!isAdmissible(r)) continue;
            CHECK(countPermutations(s, n) == countPermutations(r, n));
        }
    }
}

TEST_CASE("fitPolynomial")
{
    const auto tri = ints({0, 1, 3, 6, 10});
    const auto fit = fitPolynomial(tri, 0, 0);
    CHECK(std::vector<BigInt>(fit.polynomial.coeffs().begin(), fit.polynomial.coeffs().end()) == ints({0, 1, 1}));
    CHECK(fit.differenceTable.size() == 4);
    CHECK(fit.differenceTable[1] == ints({1, 2, 3, 4}));

    const auto sample = ints({10, 35, 84, 168, 300, 495, 770, 1144, 1638});
    const auto f25 = fitPolynomial(sample, 6, 6);
    CHECK(std::vector<BigInt>(f25.polynomial.coeffs().begin(), f25.polynomial.coeffs().end()) ==
          ints({10, 25, 24, 11, 2}));
    CHECK(f25.differenceTable[4] == ints({2, 2, 2, 2, 2}));
    CHECK(f25.differenceTable[5] == ints({0, 0, 0, 0}));

    CHECK_THROWS_AS(fitPolynomial(ints({1, 2, 4, 8}), 0, 0), FitError);
}

TEST_CASE("fit of sampled random polynomials recovers them")
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coeff(-30, 30);
    for (int trial = 0; trial < 1000; ++trial) {
        const int deg = trial % 9;
        const int shift = static_cast<int>(rng() % 21) - 10;
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
        for (auto& x : c) x = coeff(rng);
        if (c.back() == 0) c.back() = 1;
        const BinomialPolynomial p(shift, c);
        const int start = static_cast<int>(rng() % 21) - 10;
        std::vector<BigInt> values;
        for (int i = 0; i < deg + 3; ++i) values.push_back(p(start + i));
        const auto fit = fitPolynomial(values, start, shift);
        REQUIRE(fit.polynomial == p);
        CHECK(fit.polynomial.degree() == deg);
    }
}

TEST_CASE("symbolic fits")
{
    const auto ends = fitSymbolic(SymbolicPeakSet::parse("2,n-1"));
    CHECK(ends.fittedDegree == 2);
    for (int n = 5; n <= 20; ++n) CHECK(ends.polynomial(n) == BigInt(n - 1) * (n - 4));

    const auto empty = fitSymbolic(SymbolicPeakSet::parse(""));
    CHECK(empty.fittedDegree == 0);
    CHECK(empty.polynomial(7) == 1);

    const auto last = fitSymbolic(SymbolicPeakSet::parse("n-1"));
    CHECK(last.fittedDegree == 1);
    for (int n = 3; n <= 15; ++n) CHECK(last.polynomial(n) == n - 2);

    const auto wide = fitSymbolic(SymbolicPeakSet::parse("2,4,n-3,n-1"));
    CHECK(wide.fittedDegree == expectedSymbolicDegree(SymbolicPeakSet::parse("2,4,n-3,n-1")));
}

TEST_CASE("peakPolynomial is safe under concurrent first use")
{
    const auto sets = admissibleSets(13);
    std::vector<std::vector<BinomialPolynomial>> results(4);
    {
        std::vector<std::jthread> workers;
        for (std::size_t w = 0; w < results.size(); ++w) {
            workers.emplace_back([&, w] {
                for (std::size_t i = 0; i < sets.size(); ++i) {
                    results[w].push_back(peakPolynomial(sets[(i * (w + 1)) % sets.size()]));
                }
            });
        }
    }
    for (std::size_t w = 0; w < results.size(); ++w) {
        for (std::size_t i = 0; i < sets.size(); ++i) {
            CHECK(results[w][i] == peakPolynomial(sets[(i * (w + 1)) % sets.size()]));
        }
    }
}
