#pragma once

// Permutations with a prescribed set of peaks and valleys.
//
// A signature (positions, firstIsPeak) fixes the whole up/down pattern of a
// permutation, so every position set inside [2, n-1] is realizable, adjacent
// positions included. Peak-first and valley-first classes are equinumerous
// (complement a_i -> n+1-a_i).

#include <vector>

#include "peaks/core.hpp"
#include "peaks/oracle.hpp"

namespace peaks {

/// #{pi in S_n : PV(pi) = positions, first extremum of the stated type}.
/// Closed forms for {m}, {2,m}, {2,m,n-1}; otherwise the up/down counter.
/// Positions outside [2, n-1] give 0. The empty signature counts the two
/// monotone permutations under firstIsPeak == false.
BigInt pvCount(const std::vector<int>& positions, bool firstIsPeak, int n);

/// #PV(m;n) = C(n-1, m-1). Requires 2 <= m <= n-1.
BigInt pvSingle(int m, int n);
/// #PV(2,m;n) = C(n-2, m-2) + (m-2) C(n-1, m-1). Requires 3 <= m <= n-1.
BigInt pvPair(int m, int n);
/// 2(n-1)[C(n-4, m-2) + (m-2) C(n-3, m-1)], the one-sided form for {2,m,n-1}.
/// Agrees with the true count only when m = n+1-m; see pvTripleSplit.
/// Requires 4 <= m <= n-3.
BigInt pvTriple(int m, int n);
/// #PV(2,m,n-1;n) = (n-1)[h(m) + h(n+1-m)], h(x) = C(n-4,x-2) + (x-2)C(n-3,x-1):
/// the maximum sits at position n-1 (h(m)) or, by reversal, at 2 (h(n+1-m)).
/// Requires 4 <= m <= n-3.
BigInt pvTripleSplit(int m, int n);

/// Exact count of permutations whose up/down pattern is the one fixed by the
/// signature. O(n^2) big-integer dynamic program over the relative rank of
/// the last entry; independent of both the oracle and the closed forms.
BigInt signatureCount(const std::vector<int>& positions, bool firstIsPeak, int n);

struct PVFit {
    BinomialPolynomial polynomial;  // in B_{firstN}
    int firstN = 0;
    int expectedDegree = 0;
    int fittedDegree = -1;
    std::vector<BigInt> samples;
};

/// Fits q(n) = #PV(S;n) from exact counts at n = max S + 1, ... and checks
/// deg q = max S - 1. Throws FitError on failure.
PVFit pvPolynomialFit(const std::vector<int>& positions, bool firstIsPeak, int extraSamples = 3);

}  // namespace peaks
