#include "peaks/coeffs.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "peaks/counting.hpp"

namespace peaks {

std::vector<BigInt> coefficients(const PeakSet& s)
{
    if (s.empty()) throw std::invalid_argument("coefficients: S must be nonempty");
    const int m = s.max();
    std::vector<BigInt> out(static_cast<std::size_t>(m));
    const auto p = peakPolynomial(s).rebased(m);
    const auto c = p.coeffs();
    if (static_cast<int>(c.size()) > m) {
        throw std::logic_error("coefficients: degree of p" + s.toString() + " exceeds max S - 1");
    }
    std::copy(c.begin(), c.end(), out.begin());
    return out;
}

BigInt coeffTwoElementSum(int l, int m, int k)
{
    const BigInt chi = (m - l) % 2 == 0 ? 1 : 0;
    BigInt sum = -2 * choose(m - 1, k + m - l) * chi;
    for (int j = 0; j <= m - l - 2; ++j) {
        const BigInt sign = j % 2 == 0 ? 1 : -1;
        sum += sign * (choose(m - j - 2, l - 1) - 1) * choose(m, k + j + 1);
    }
    return sum;
}

BigInt coeffClosedForm(const PeakSet& s, int k)
{
    const auto p = s.positions();
    if (!isAdmissible(s) || p.empty() || p.size() > 2) {
        throw UnsupportedPattern("coeffClosedForm: no closed formula for " + s.toString() +
                                 "; use coefficients()");
    }
    const int m = s.max();
    if (k < 0 || k >= m) throw std::invalid_argument("coeffClosedForm: k out of range");
    if (p.size() == 1) return k == 0 ? BigInt(0) : choose(m - 1, k);
    const int l = p[0];
    if (l == 2) return (m - 3) * choose(m - 2, k - 1) + (m - 2) * choose(m - 2, k) - choose(m - 2, k + m - 3);
    if (k == 0) return 0;
    return coeffTwoElementSum(l, m, k);
}

PositivityReport positivityScan(int maxPeak, unsigned threads)
{
    PositivityReport report;
    report.maxPeak = maxPeak;
    const auto sets = admissibleSets(maxPeak);
    report.setsExamined = sets.size();

    std::vector<std::vector<BigInt>> coeffs(sets.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < sets.size(); i = next++) coeffs[i] = coefficients(sets[i]);
    };
    const unsigned workers = std::max(1u, threads);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
    }

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const auto& c = coeffs[i];
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] < 0) report.violations.push_back({sets[i], static_cast<int>(k), c[k]});
        }
        if (c.front() != 0) report.constantTermFailures.push_back(sets[i]);
        if (c.back() <= 0) report.leadingTermFailures.push_back(sets[i]);
    }
    return report;
}

}  // namespace peaks
