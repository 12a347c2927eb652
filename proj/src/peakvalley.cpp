#include "peaks/peakvalley.hpp"

#include <string>

#include "peaks/counting.hpp"

namespace peaks {

namespace {

bool validPositions(const std::vector<int>& positions, int n)
{
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 2 || positions[i] > n - 1) return false;
        if (i > 0 && positions[i] <= positions[i - 1]) return false;
    }
    return true;
}

void require(bool ok, const char* what, int m, int n)
{
    if (!ok) {
        throw std::invalid_argument(std::string(what) + ": parameters out of range (m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + ")");
    }
}

// Permutations of [n] whose step i (a_i -> a_{i+1}) rises iff up[i-1].
BigInt countUpDown(const std::vector<bool>& up)
{
    std::vector<BigInt> dp{1};
    for (bool rising : up) {
        const std::size_t len = dp.size();
        std::vector<BigInt> next(len + 1);
        if (rising) {
            BigInt acc = 0;
            for (std::size_t j = 0; j <= len; ++j) {
                next[j] = acc;
                if (j < len) acc += dp[j];
            }
        } else {
            BigInt acc = 0;
            for (std::size_t j = len; j-- > 0;) {
                acc += dp[j];
                next[j] = acc;
            }
        }
        dp = std::move(next);
    }
    BigInt total = 0;
    for (const auto& v : dp) total += v;
    return total;
}

std::vector<bool> stepPattern(const std::vector<int>& positions, bool firstUp, int n)
{
    std::vector<bool> up;
    bool rising = firstUp;
    std::size_t next = 0;
    for (int step = 1; step <= n - 1; ++step) {
        if (next < positions.size() && positions[next] == step) {
            rising = !rising;
            ++next;
        }
        up.push_back(rising);
    }
    return up;
}

BigInt tripleHalf(int x, int n) { return choose(n - 4, x - 2) + (x - 2) * choose(n - 3, x - 1); }

}  // namespace

BigInt signatureCount(const std::vector<int>& positions, bool firstIsPeak, int n)
{
    if (n < 1 || !validPositions(positions, n)) return 0;
    if (positions.empty()) {
        if (firstIsPeak) return 0;
        if (n == 1) return 1;
        return countUpDown(stepPattern({}, true, n)) + countUpDown(stepPattern({}, false, n));
    }
    return countUpDown(stepPattern(positions, firstIsPeak, n));
}

BigInt pvSingle(int m, int n)
{
    require(m >= 2 && m <= n - 1, "pvSingle", m, n);
    return choose(n - 1, m - 1);
}

BigInt pvPair(int m, int n)
{
    require(m >= 3 && m <= n - 1, "pvPair", m, n);
    return choose(n - 2, m - 2) + (m - 2) * choose(n - 1, m - 1);
}

BigInt pvTriple(int m, int n)
{
    require(m >= 4 && m <= n - 3, "pvTriple", m, n);
    return 2 * BigInt(n - 1) * tripleHalf(m, n);
}

BigInt pvTripleSplit(int m, int n)
{
    require(m >= 4 && m <= n - 3, "pvTripleSplit", m, n);
    return BigInt(n - 1) * (tripleHalf(m, n) + tripleHalf(n + 1 - m, n));
}

BigInt pvCount(const std::vector<int>& positions, bool firstIsPeak, int n)
{
    if (n < 1 || !validPositions(positions, n)) return 0;
    // valley-first classes have the same size as peak-first ones
    const auto& p = positions;
    if (p.size() == 1) return pvSingle(p[0], n);
    if (p.size() == 2 && p[0] == 2) return pvPair(p[1], n);
    if (p.size() == 3 && p[0] == 2 && p[2] == n - 1 && p[1] >= 4 && p[1] <= n - 3) return pvTripleSplit(p[1], n);
    if (p.empty()) return signatureCount(p, firstIsPeak, n);
    return signatureCount(p, true, n);
}

PVFit pvPolynomialFit(const std::vector<int>& positions, bool firstIsPeak, int extraSamples)
{
    PVFit fit;
    const int top = positions.empty() ? 1 : positions.back();
    fit.firstN = top + 1;
    fit.expectedDegree = positions.empty() ? 0 : top - 1;
    const int sampleCount = fit.expectedDegree + 2 + std::max(0, extraSamples);
    for (int i = 0; i < sampleCount; ++i) {
        fit.samples.push_back(signatureCount(positions, firstIsPeak, fit.firstN + i));
    }
    fit.polynomial = fitPolynomial(fit.samples, fit.firstN, fit.firstN).polynomial;
    fit.fittedDegree = fit.polynomial.degree();
    if (fit.fittedDegree != fit.expectedDegree) {
        throw FitError("pvPolynomialFit: degree " + std::to_string(fit.fittedDegree) + " but expected " +
                       std::to_string(fit.expectedDegree));
    }
    return fit;
}

}  // namespace peaks
