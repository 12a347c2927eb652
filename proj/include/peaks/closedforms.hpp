#pragma once

// Explicit peak polynomials for particular families of peak sets.
//
// Families with constant elements are returned as polynomials in n. Families
// that depend on n ({2,...,n-1}) are integer evaluators in (m, n); several of
// those are stated as 2p(S;n), and halving is checked for exactness.

#include <stdexcept>

#include "peaks/core.hpp"

namespace peaks {

/// An expression that must be even came out odd.
class ParityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// S = {m}: C(n-1, m-1) - 1. Requires m >= 2.
BinomialPolynomial pSingle(int m);
/// S = {2, m}: (m-3)C(n-2,m-1) + (m-2)C(n-2,m-2) - C(n-2,1). Requires m >= 4.
BinomialPolynomial pPairWith2(int m);
/// S = {2, m, m+2}. Requires m >= 4.
BinomialPolynomial pTripleWith2(int m);

/// S = {2, n-1}: (n-1)(n-4). Requires n >= 5.
BigInt pEnds(int n);
/// S = {2, m, n-1}. Requires 4 <= m <= n-3.
BigInt pMidEnds(int m, int n);
/// S = {2, m, m+2, n-1}. Requires 4 <= m and m+2 <= n-3.
BigInt pMidPairEnds(int m, int n);

/// p(S;n) for S containing 2 and n-1, obtained by placing n at each peak:
/// 2p(S;n) = sum_j p(S_L; i_j - 1) p(S_R^r; n - i_j) C(n-1, i_j - 1).
BigInt splitAtMax(const PeakSet& s, int n);

}  // namespace peaks
