#include "peaks/closedforms.hpp"

#include <string>

#include "peaks/counting.hpp"

namespace peaks {

namespace {

void require(bool ok, const char* what, int m, int n = -1)
{
    if (ok) return;
    std::string msg = std::string(what) + ": parameters out of range (m=" + std::to_string(m);
    if (n >= 0) msg += ", n=" + std::to_string(n);
    throw std::invalid_argument(msg + ")");
}

BigInt halve(const BigInt& twice, const char* what)
{
    if ((twice & 1) != 0) {
        throw ParityError(std::string(what) + ": right-hand side " + twice.str() + " is odd");
    }
    return twice / 2;
}

}  // namespace

BinomialPolynomial pSingle(int m)
{
    require(m >= 2, "pSingle", m);
    return polyLinComb({
        {1, BinomialPolynomial::term(1, 1, m - 1)},
        {-1, BinomialPolynomial::constant(1)},
    });
}

BinomialPolynomial pPairWith2(int m)
{
    require(m >= 4, "pPairWith2", m);
    return polyLinComb({
        {m - 3, BinomialPolynomial::term(1, 2, m - 1)},
        {m - 2, BinomialPolynomial::term(1, 2, m - 2)},
        {-1, BinomialPolynomial::term(1, 2, 1)},
    });
}

BinomialPolynomial pTripleWith2(int m)
{
    require(m >= 4, "pTripleWith2", m);
    return polyLinComb({
        {m * (m - 3), BinomialPolynomial::term(1, 0, m + 1)},
        {-2 * (m - 3), BinomialPolynomial::term(1, 2, m - 1)},
        {-2 * (m - 2), BinomialPolynomial::term(1, 2, m - 2)},
        {2, BinomialPolynomial::term(1, 2, 1)},
    });
}

BigInt pEnds(int n)
{
    require(n >= 5, "pEnds", 2, n);
    return BigInt(n - 1) * (n - 4);
}

BigInt pMidEnds(int m, int n)
{
    require(m >= 4 && m <= n - 3, "pMidEnds", m, n);
    const BigInt twice =
        BigInt(m - 3) * (n - m - 2) * choose(n - 1, m - 1) +
        BigInt(n - 1) * (BigInt(m - 3) * choose(n - 4, m - 1) + BigInt(m - 2) * choose(n - 4, m - 2) +
                         BigInt(n - m - 1) * choose(n - 4, m - 3) + BigInt(n - m - 2) * choose(n - 4, m - 4) -
                         2 * choose(n - 4, 1));
    return halve(twice, "pMidEnds");
}

BigInt pMidPairEnds(int m, int n)
{
    require(m >= 4 && m + 2 <= n - 3, "pMidPairEnds", m, n);
    const BigInt twice =
        BigInt(m - 3) * (n - m - 4) * (m * choose(n - 1, m + 1) + (n - m - 1) * choose(n - 1, m - 1)) +
        BigInt(n - 1) * (BigInt(m) * (m - 3) * choose(n - 2, m + 1) +
                         BigInt(n - m - 1) * (n - m - 4) * choose(n - 2, m - 2) -
                         BigInt(2) * (n - 6) * choose(n - 4, m - 1) -
                         BigInt(2) * (n - 6) * choose(n - 4, m - 2) + 4 * choose(n - 4, 1));
    return halve(twice, "pMidPairEnds");
}

BigInt splitAtMax(const PeakSet& s, int n)
{
    if (!s.contains(2) || !s.contains(n - 1) || n < 5) {
        throw std::invalid_argument("splitAtMax: " + s.toString() + " must contain 2 and n-1 (n=" +
                                    std::to_string(n) + ")");
    }
    if (!isAdmissible(s)) {
        throw std::invalid_argument("splitAtMax: " + s.toString() + " is not admissible");
    }
    const auto p = s.positions();
    BigInt twice = 0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        const int at = p[j];
        std::vector<int> left(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<int> rightReflected;
        for (std::size_t r = j + 1; r < p.size(); ++r) rightReflected.push_back(n + 1 - p[r]);
        const BigInt leftValue = peakPolynomial(PeakSet(std::move(left)))(at - 1);
        const BigInt rightValue = peakPolynomial(PeakSet(std::move(rightReflected)))(n - at);
        twice += leftValue * rightValue * choose(n - 1, at - 1);
    }
    return halve(twice, "splitAtMax");
}

}  // namespace peaks
