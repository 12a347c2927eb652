#pragma once

// Coefficients C^S_k of p(S;n) in the basis C(n-m, k), m = max S, the
// positivity scan over all small sets, and the closed coefficient formulas
// for {m}, {2,m} and {l,m}.

#include <stdexcept>
#include <vector>

#include "peaks/core.hpp"

namespace peaks {

/// C^S_0 .. C^S_{m-1}. Inadmissible S gives all zeros. Throws
/// std::invalid_argument for the empty set.
std::vector<BigInt> coefficients(const PeakSet& s);

class UnsupportedPattern : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// C^S_k from the closed formula matching the shape of S:
///  {m}:   C(m-1,k) for k >= 1, 0 for k = 0
///  {2,m}: (m-3)C(m-2,k-1) + (m-2)C(m-2,k) - C(m-2,k+m-3)
///  {l,m}: 0 for k = 0, otherwise the alternating sum of coeffTwoElementSum.
/// Throws UnsupportedPattern for any other shape (use coefficients()).
BigInt coeffClosedForm(const PeakSet& s, int k);

/// -2 C(m-1, k+m-l) chi(m-l even) + sum_{j=0}^{m-l-2} (-1)^j [C(m-j-2, l-1) - 1] C(m, k+j+1)
/// for k >= 1.
BigInt coeffTwoElementSum(int l, int m, int k);

struct CoefficientViolation {
    PeakSet set;
    int k = 0;
    BigInt value;
};

struct PositivityReport {
    int maxPeak = 0;
    std::size_t setsExamined = 0;
    /// Negative coefficients, sorted by set then k. Expected empty.
    std::vector<CoefficientViolation> violations;
    /// Sets with C^S_0 != 0 or C^S_{m-1} <= 0.
    std::vector<PeakSet> constantTermFailures;
    std::vector<PeakSet> leadingTermFailures;

    bool clean() const noexcept
    {
        return violations.empty() && constantTermFailures.empty() && leadingTermFailures.empty();
    }
};

/// Every admissible constant S with max S <= maxPeak.
PositivityReport positivityScan(int maxPeak, unsigned threads = 1);

}  // namespace peaks
