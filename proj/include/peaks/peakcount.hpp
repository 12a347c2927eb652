#pragma once

// Permutations counted by number of peaks, f(s,n).

#include <vector>

#include "peaks/core.hpp"

namespace peaks {

/// f(s,n) for 0 <= s <= sMax, 1 <= n <= nMax, built bottom-up from
/// f(s,n) = (2s+2) f(s,n-1) + (n-2s) f(s-1,n-1), f(0,n) = 2^(n-1), and
/// f(s,n) = 0 whenever s >= n/2.
class PeakCountTable {
public:
    PeakCountTable(int sMax, int nMax);

    int sMax() const noexcept { return sMax_; }
    int nMax() const noexcept { return nMax_; }
    /// 0 outside the table's range.
    const BigInt& operator()(int s, int n) const;

private:
    int sMax_;
    int nMax_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[s][n]
    BigInt zero_ = 0;
};

PeakCountTable fTable(int sMax, int nMax);

/// 2^(2n-3) - n 2^(n-2); 0 for n = 1, 2.
BigInt fOneClosed(int n);

/// sum of countPermutations(S, n) over admissible S with #S = s.
BigInt fFromDistribution(int n, int s);

}  // namespace peaks
