#include "peaks/counting.hpp"

#include <map>
#include <mutex>
#include <string>

namespace peaks {

bool isAdmissible(const PeakSet& s) noexcept
{
    const auto p = s.positions();
    if (p.empty()) return true;
    if (p.front() < 2) return false;
    for (std::size_t i = 1; i < p.size(); ++i) {
        if (p[i] - p[i - 1] < 2) return false;
    }
    return true;
}

int minN(const PeakSet& s) noexcept { return s.empty() ? 1 : s.max() + 1; }

namespace {

void collectAdmissible(std::vector<int>& current, int start, int maxPeak, std::vector<PeakSet>& out)
{
    for (int x = start; x <= maxPeak; ++x) {
        current.push_back(x);
        out.emplace_back(current);
        collectAdmissible(current, x + 2, maxPeak, out);
        current.pop_back();
    }
}

class PolynomialMemo {
public:
    bool find(const PeakSet& s, BinomialPolynomial& out)
    {
        std::lock_guard lock(mutex_);
        const auto it = table_.find(s);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void insert(const PeakSet& s, const BinomialPolynomial& p)
    {
        std::lock_guard lock(mutex_);
        table_.emplace(s, p);
    }

private:
    std::mutex mutex_;
    std::map<PeakSet, BinomialPolynomial> table_;
};

PolynomialMemo& memo()
{
    static PolynomialMemo instance;
    return instance;
}

}  // namespace

std::vector<PeakSet> admissibleSets(int maxPeak)
{
    std::vector<PeakSet> out;
    std::vector<int> current;
    collectAdmissible(current, 2, maxPeak, out);
    return out;
}

BinomialPolynomial peakPolynomial(const PeakSet& s)
{
    if (s.empty()) return BinomialPolynomial::constant(1);
    if (!isAdmissible(s)) return {};

    BinomialPolynomial cached;
    if (memo().find(s, cached)) return cached;

    // p(S;n) = p1(m-1) C(n, m-1) - 2 p1(n) - p2(n), S1 = S - {m}, S2 = S1 + {m-1}
    const int m = s.max();
    const PeakSet s1 = s.without(m);
    const PeakSet s2 = s1.with(m - 1);
    const BinomialPolynomial p1 = peakPolynomial(s1);
    const BinomialPolynomial p2 = peakPolynomial(s2);
    const BigInt p1AtTop = p1(m - 1);

    const BinomialPolynomial result = polyLinComb({
        {1, BinomialPolynomial::term(p1AtTop, 0, m - 1)},
        {-2, p1},
        {-1, p2},
    });
    memo().insert(s, result);
    return result;
}

BigInt countPermutations(const PeakSet& s, int n)
{
    if (n < 1 || !isAdmissible(s)) return 0;
    if (s.empty()) return pow2(static_cast<unsigned>(n - 1));
    if (n <= s.max()) return 0;
    BigInt c = peakPolynomial(s)(n);
    c <<= static_cast<unsigned>(n - s.size() - 1);
    return c;
}

FitResult fitPolynomial(std::span<const BigInt> values, int firstN, int shift)
{
    if (values.empty()) throw FitError("fitPolynomial: no values");
    FitResult result;
    auto& rows = result.differenceTable;
    rows.emplace_back(values.begin(), values.end());
    int degree = -2;
    while (true) {
        const auto& row = rows.back();
        bool allZero = true;
        for (const auto& v : row) {
            if (v != 0) {
                allZero = false;
                break;
            }
        }
        if (allZero) {
            degree = static_cast<int>(rows.size()) - 2;
            break;
        }
        if (row.size() == 1) {
            throw FitError("fitPolynomial: " + std::to_string(values.size()) +
                           " values do not certify a polynomial (no vanishing difference row)");
        }
        std::vector<BigInt> next(row.size() - 1);
        for (std::size_t i = 0; i + 1 < row.size(); ++i) next[i] = row[i + 1] - row[i];
        rows.push_back(std::move(next));
    }
    std::vector<BigInt> coeffs;
    for (int k = 0; k <= degree; ++k) coeffs.push_back(rows[static_cast<std::size_t>(k)].front());
    result.polynomial = BinomialPolynomial(firstN, std::move(coeffs)).rebased(shift);
    return result;
}

int expectedSymbolicDegree(const SymbolicPeakSet& s) noexcept
{
    const int lowCount = s.lowCount();
    const int highCount = s.highCount();
    if (lowCount == 0 && highCount == 0) return 0;
    if (highCount == 0) return s.low().back() - 1;
    if (lowCount == 0) return s.highOffsets().front();
    return s.low().back() + s.highOffsets().front() - 1;
}

SymbolicFit fitSymbolic(const SymbolicPeakSet& s, int extraSamples)
{
    SymbolicFit fit;
    fit.firstN = s.minN();
    fit.expectedDegree = expectedSymbolicDegree(s);
    const int sampleCount = fit.expectedDegree + 2 + std::max(0, extraSamples);
    for (int i = 0; i < sampleCount; ++i) {
        const int n = fit.firstN + i;
        const PeakSet concrete = s.instantiate(n);
        if (!isAdmissible(concrete)) {
            throw FitError("fitSymbolic: " + s.toString() + " is not admissible at n=" + std::to_string(n));
        }
        const BigInt count = countPermutations(concrete, n);
        const unsigned power = static_cast<unsigned>(n - concrete.size() - 1);
        const BigInt value = count >> power;
        if ((value << power) != count) {
            throw FitError("fitSymbolic: count at n=" + std::to_string(n) + " not divisible by 2^" +
                           std::to_string(power));
        }
        fit.samples.push_back(value);
    }
    fit.polynomial = fitPolynomial(fit.samples, fit.firstN, fit.firstN).polynomial;
    fit.fittedDegree = fit.polynomial.degree();
    if (fit.fittedDegree != fit.expectedDegree) {
        throw FitError("fitSymbolic: " + s.toString() + " fitted degree " + std::to_string(fit.fittedDegree) +
                       " but expected " + std::to_string(fit.expectedDegree));
    }
    return fit;
}

}  // namespace peaks
