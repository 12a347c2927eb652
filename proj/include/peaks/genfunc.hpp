#pragma once

// Rational generating functions sum_n #P(S;n) x^n = r(x) / (1-2x)^m and the
// linear recurrence they imply.

#include <map>
#include <span>
#include <string>
#include <vector>

#include "peaks/core.hpp"

namespace peaks {

/// numerator(x) / (1 - 2x)^denomExponent, numerator stored sparsely.
struct RationalGF {
    std::map<int, BigInt> numerator;
    int denomExponent = 0;

    /// e.g. "80x^6 - 240x^7 + 288x^8 - 128x^9"
    std::string numeratorString() const;

    friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

/// r(x) = sum_{k=m+1}^{2m-1} x^k sum_{j=0}^{k-m-1} (-2)^j C(m,j) #P(S;k-j) over
/// (1-2x)^m with m = max S. Throws std::invalid_argument for empty or
/// inadmissible S.
RationalGF generatingFunction(const PeakSet& s);

/// x / (1-2x), the series of #P(∅;n) = 2^(n-1).
RationalGF emptySetGeneratingFunction();

/// Coefficients of x^1 .. x^terms (element i is the coefficient of x^(i+1)).
std::vector<BigInt> seriesExpand(const RationalGF& gf, int terms);

/// c_1..c_m with a_n = sum_j c_j a_{n-j}, i.e. c_j = -(-2)^j C(m,j).
std::vector<BigInt> recurrenceCoefficients(int m);

/// sum_{j=0}^m (-2)^j C(m,j) a_{n-j} == 0 for every n in [2m, nMax], where
/// counts[i] holds a_{i+1}. Needs counts.size() >= nMax.
bool recurrenceHolds(std::span<const BigInt> counts, int m, int nMax);

/// recurrenceHolds on countPermutations(S, 1..nMax). Requires S nonempty
/// and admissible.
bool recurrenceCheck(const PeakSet& s, int nMax);

}  // namespace peaks
