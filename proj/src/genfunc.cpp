#include "peaks/genfunc.hpp"

#include <stdexcept>

#include "peaks/counting.hpp"

namespace peaks {

namespace {

// (-2)^j C(m,j), j = 0..m
std::vector<BigInt> denominatorCoefficients(int m)
{
    std::vector<BigInt> d(static_cast<std::size_t>(m) + 1);
    BigInt power = 1;
    for (int j = 0; j <= m; ++j) {
        d[static_cast<std::size_t>(j)] = power * binomial(m, j);
        power *= -2;
    }
    return d;
}

}  // namespace

std::string RationalGF::numeratorString() const
{
    std::string s;
    for (const auto& [k, c] : numerator) {
        if (c == 0) continue;
        std::string digits = c.str();
        if (s.empty()) {
            s += digits;
        } else if (digits[0] == '-') {
            s += " - " + digits.substr(1);
        } else {
            s += " + " + digits;
        }
        if (k >= 1) s += "x";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

RationalGF generatingFunction(const PeakSet& s)
{
    if (s.empty() || !isAdmissible(s)) {
        throw std::invalid_argument("generatingFunction: requires a nonempty admissible set, got " + s.toString());
    }
    const int m = s.max();
    const auto d = denominatorCoefficients(m);
    RationalGF gf;
    gf.denomExponent = m;
    for (int k = m + 1; k <= 2 * m - 1; ++k) {
        BigInt c = 0;
        for (int j = 0; j <= k - m - 1; ++j) c += d[static_cast<std::size_t>(j)] * countPermutations(s, k - j);
        if (c != 0) gf.numerator[k] = c;
    }
    return gf;
}

RationalGF emptySetGeneratingFunction()
{
    RationalGF gf;
    gf.denomExponent = 1;
    gf.numerator[1] = 1;
    return gf;
}

std::vector<BigInt> seriesExpand(const RationalGF& gf, int terms)
{
    if (terms < 1) throw std::invalid_argument("seriesExpand: need at least one term");
    const int m = gf.denomExponent;
    const auto d = denominatorCoefficients(m);
    // a_n = r_n - sum_{j=1}^m d_j a_{n-j}, with a_0 = r_0.
    std::vector<BigInt> a(static_cast<std::size_t>(terms) + 1);
    for (int n = 0; n <= terms; ++n) {
        BigInt v = 0;
        if (const auto it = gf.numerator.find(n); it != gf.numerator.end()) v = it->second;
        for (int j = 1; j <= m && j <= n; ++j) v -= d[static_cast<std::size_t>(j)] * a[static_cast<std::size_t>(n - j)];
        a[static_cast<std::size_t>(n)] = std::move(v);
    }
    return {a.begin() + 1, a.end()};
}

std::vector<BigInt> recurrenceCoefficients(int m)
{
    const auto d = denominatorCoefficients(m);
    std::vector<BigInt> c;
    for (int j = 1; j <= m; ++j) c.push_back(-d[static_cast<std::size_t>(j)]);
    return c;
}

bool recurrenceHolds(std::span<const BigInt> counts, int m, int nMax)
{
    if (static_cast<int>(counts.size()) < nMax) {
        throw std::invalid_argument("recurrenceHolds: need counts up to n=" + std::to_string(nMax));
    }
    const auto d = denominatorCoefficients(m);
    for (int n = 2 * m; n <= nMax; ++n) {
        BigInt sum = 0;
        for (int j = 0; j <= m; ++j) {
            const int idx = n - j;
            if (idx >= 1) sum += d[static_cast<std::size_t>(j)] * counts[static_cast<std::size_t>(idx - 1)];
        }
        if (sum != 0) return false;
    }
    return true;
}

bool recurrenceCheck(const PeakSet& s, int nMax)
{
    if (s.empty() || !isAdmissible(s)) {
        throw std::invalid_argument("recurrenceCheck: requires a nonempty admissible set, got " + s.toString());
    }
    std::vector<BigInt> counts;
    for (int n = 1; n <= nMax; ++n) counts.push_back(countPermutations(s, n));
    return recurrenceHolds(counts, s.max(), nMax);
}

}  // namespace peaks
