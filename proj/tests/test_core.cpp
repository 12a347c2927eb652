#include <doctest.h>

#include <random>

#include "peaks/core.hpp"

using namespace peaks;

namespace {

// Independent evaluation: C(t,k) as a falling factorial over k!, in rationals.
BigInt fallingBinomial(std::int64_t t, int k)
{
    BigRational num = 1;
    BigRational den = 1;
    for (int i = 0; i < k; ++i) {
        num *= t - i;
        den *= i + 1;
    }
    const BigRational q = num / den;
    REQUIRE(denominator(q) == 1);
    return numerator(q);
}

BigInt directEvaluate(int shift, const std::vector<BigInt>& coeffs, std::int64_t n)
{
    BigInt sum = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) sum += coeffs[k] * fallingBinomial(n - shift, static_cast<int>(k));
    return sum;
}

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

std::vector<BigInt> coeffVector(const BinomialPolynomial& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

}  // namespace

TEST_CASE("binomial: standard values and generalized top")
{
    CHECK(binomial(5, 2) == 10);
    for (int t = -7; t <= 7; ++t) CHECK(binomial(t, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-1, 4) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(0, 5) == 0);
    CHECK(binomial(60, 30) == BigInt("118264581564861424"));
    CHECK_THROWS_AS(binomial(4, -1), std::invalid_argument);
}

TEST_CASE("choose: zero outside the usual triangle")
{
    CHECK(choose(3, 4) == 0);
    CHECK(choose(3, -1) == 0);
    CHECK(choose(4, 2) == 6);
}

TEST_CASE("binomial: Pascal recursion holds for negative tops")
{
    for (int t = -15; t <= 15; ++t) {
        for (int k = 1; k <= 10; ++k) {
            CHECK(binomial(t, k) == binomial(t - 1, k - 1) + binomial(t - 1, k));
        }
    }
}

TEST_CASE("evaluate")
{
    CHECK(BinomialPolynomial{}(17) == 0);
    CHECK(BinomialPolynomial{}(-3) == 0);
    const BinomialPolynomial p25(6, ints({10, 25, 24, 11, 2}));
    CHECK(p25(7) == 35);
    CHECK(p25(6) == 10);
    // n(n-5)(n-2)(n-1)/12 at a few points
    for (int n = -5; n <= 20; ++n) CHECK(p25(n) * 12 == BigInt(n) * (n - 5) * (n - 2) * (n - 1));

    const auto two = polyLinComb({{1, BinomialPolynomial::term(1, 0, 1)}, {-2, BinomialPolynomial::constant(1)}});
    CHECK(two(6) == 4);
}

TEST_CASE("rebase")
{
    const BinomialPolynomial p(6, ints({10, 25, 24, 11, 2}));
    const auto q = rebase(p, 5);
    CHECK(q.shift() == 5);
    CHECK(coeffVector(q) == ints({0, 10, 15, 9, 2}));
    CHECK(coeffVector(rebase(p, 6)) == coeffVector(p));
    CHECK(rebase(BinomialPolynomial{}, 9).isZero());
    CHECK(p == q);
}

TEST_CASE("rebase preserves values of random polynomials")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> degree(0, 10);
    std::uniform_int_distribution<int> shift(-10, 10);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 1000; ++trial) {
        const int a = shift(rng);
        const int b = shift(rng);
        std::vector<BigInt> c(static_cast<std::size_t>(degree(rng)) + 1);
        for (auto& x : c) x = coeff(rng);
        const BinomialPolynomial p(a, c);
        const auto q = p.rebased(b);
        CHECK(q.degree() == p.degree());
        const std::vector<BigInt> qc(q.coeffs().begin(), q.coeffs().end());
        for (int n = -20; n <= 40; n += 3) {
            REQUIRE(directEvaluate(b, qc, n) == directEvaluate(a, c, n));
        }
        CHECK(q.rebased(a) == p);
        CHECK(coeffVector(q.rebased(a)) == coeffVector(p));
    }
}

TEST_CASE("polyLinComb")
{
    const BinomialPolynomial p(3, ints({1, -4, 7}));
    CHECK(polyLinComb({{1, p}, {-1, p}}).isZero());
    CHECK(polyLinComb({{0, p}, {2, BinomialPolynomial::constant(3)}}) == BinomialPolynomial::constant(6));
    const auto two = polyLinComb({{1, BinomialPolynomial::term(1, 0, 1)}, {-2, BinomialPolynomial::constant(1)}});
    CHECK(two == BinomialPolynomial(0, ints({-2, 1})));
    CHECK(two.shift() == 0);
}

TEST_CASE("PeakSet basics")
{
    const PeakSet s{5, 2};
    CHECK(s.toString() == "{2,5}");
    CHECK(s.max() == 5);
    CHECK(s.reflected(7) == PeakSet{3, 6});
    CHECK(PeakSet::fromMask(s.mask()) == s);
    CHECK(s.without(5) == PeakSet{2});
    CHECK(s.with(4) == PeakSet{2, 4, 5});
    CHECK(PeakSet{}.max() == 0);
    CHECK_THROWS_AS(PeakSet({2, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PeakSet({0, 3}), std::invalid_argument);
}

TEST_CASE("SymbolicPeakSet")
{
    const auto s = SymbolicPeakSet::parse("2, n-1");
    CHECK(s.low().size() == 1);
    CHECK(s.highOffsets().size() == 1);
    CHECK(s.minN() == 5);
    CHECK(s.instantiate(9) == PeakSet{2, 8});
    CHECK(s.toString() == "2,n-1");
    CHECK_THROWS_AS(s.instantiate(4), std::invalid_argument);

    const auto t = SymbolicPeakSet::parse("n-1,4,n-3,2");
    CHECK(t.toString() == "2,4,n-3,n-1");
    CHECK(t.minN() == 9);
    CHECK(SymbolicPeakSet::parse("").size() == 0);
    CHECK_THROWS_AS(SymbolicPeakSet::parse("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPeakSet::parse("2,2"), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPeakSet::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicPeakSet::parse("n-0"), std::invalid_argument);
}

TEST_CASE("compositionOf")
{
    CHECK(compositionOf(PeakSet{2, 5}, 7) == Composition({2, 3, 3}));
    CHECK(compositionOf(PeakSet{}, 5) == Composition({6}));
    CHECK(compositionOf(PeakSet{2, 4}, 5) == Composition({2, 2, 2}));
    CHECK_THROWS_AS(compositionOf(PeakSet{2, 8}, 7), std::invalid_argument);
}

TEST_CASE("compositionOf and toPeakSet are inverse on every subset of [2, n-1]")
{
    for (int n = 1; n <= 12; ++n) {
        const std::uint32_t interior = n >= 3 ? ((1u << (n - 1)) - 1u) & ~1u : 0u;
        for (std::uint32_t m = 0; m < (1u << n); ++m) {
            if ((m & ~interior) != 0) continue;
            const auto s = PeakSet::fromMask(m);
            const auto kappa = compositionOf(s, n);
            REQUIRE(kappa.total() == n + 1);
            REQUIRE(kappa.partCount() == s.size() + 1);
            REQUIRE(toPeakSet(kappa) == s);
        }
    }
}

TEST_CASE("isTuran and quotient")
{
    CHECK(isTuran(Composition({3, 3, 2})));
    CHECK(quotient(Composition({3, 3, 2})) == 2);
    CHECK_FALSE(isTuran(Composition({4, 2, 3})));
    CHECK(isTuran(Composition({3, 3, 3})));
    CHECK(quotient(Composition({3, 3, 3})) == 3);
    CHECK_THROWS_AS(Composition({3, 0}), std::invalid_argument);
}
