#pragma once

// Admissibility, the peak-polynomial recursion, exact counts #P(S;n), and
// finite-difference polynomial fitting.

#include <span>
#include <stdexcept>
#include <vector>

#include "peaks/core.hpp"

namespace peaks {

/// S is n-admissible for some n: min S >= 2 and consecutive gaps >= 2.
bool isAdmissible(const PeakSet& s) noexcept;
/// Smallest n with #P(S;n) != 0, i.e. max S + 1 (1 for the empty set).
/// Meaningful only for admissible S.
int minN(const PeakSet& s) noexcept;

/// Every admissible nonempty set with max S <= maxPeak, in lexicographic order.
std::vector<PeakSet> admissibleSets(int maxPeak);

/// p(S;n) with #P(S;n) = p(S;n) 2^(n-#S-1) for n > max S. Zero for
/// inadmissible S. Built by the max-removal recursion from p(∅;n) = 1 and
/// memoized; safe to call from several threads.
BinomialPolynomial peakPolynomial(const PeakSet& s);

/// Exact #P(S;n) for n >= 1. 0 when n <= max S or S is inadmissible.
BigInt countPermutations(const PeakSet& s, int n);

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FitResult {
    BinomialPolynomial polynomial;
    /// rows[0] are the input values, rows[k] the k-th forward differences.
    std::vector<std::vector<BigInt>> differenceTable;
};

/// Forward differences of values taken at n0, n0+1, ...; the first entry of
/// row k is the coefficient of C(n-n0, k). Throws FitError unless some row
/// is identically zero (so the sample is long enough to certify the degree).
FitResult fitPolynomial(std::span<const BigInt> values, int firstN, int shift);

/// Degree of p(S;n) for an n-dependent set: 0, i_s-1, j_t or i_s+j_t-1.
int expectedSymbolicDegree(const SymbolicPeakSet& s) noexcept;

struct SymbolicFit {
    BinomialPolynomial polynomial;  // in B_{firstN}
    int firstN = 0;
    int expectedDegree = 0;
    int fittedDegree = -1;
    std::vector<BigInt> samples;  // #P(S(n);n) / 2^(n-#S-1)
};

/// Instantiates S at consecutive n starting from its smallest admissible n,
/// divides out the power of two and fits. Throws FitError if the samples do
/// not fit a polynomial or the degree disagrees with expectedSymbolicDegree.
SymbolicFit fitSymbolic(const SymbolicPeakSet& s, int extraSamples = 3);

}  // namespace peaks
