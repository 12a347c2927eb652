#include "peaks/peakcount.hpp"

#include <stdexcept>

#include "peaks/counting.hpp"
#include "peaks/equidist.hpp"

namespace peaks {

PeakCountTable::PeakCountTable(int sMax, int nMax)
    : sMax_(sMax), nMax_(nMax)
{
    if (sMax < 0 || nMax < 1) throw std::invalid_argument("fTable: need sMax >= 0 and nMax >= 1");
    rows_.assign(static_cast<std::size_t>(sMax) + 1, std::vector<BigInt>(static_cast<std::size_t>(nMax) + 1));
    for (int n = 1; n <= nMax; ++n) {
        for (int s = 0; s <= sMax; ++s) {
            auto& cell = rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)];
            if (2 * s >= n && s > 0) {
                cell = 0;
            } else if (s == 0) {
                cell = pow2(static_cast<unsigned>(n - 1));
            } else {
                cell = (2 * s + 2) * rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n - 1)] +
                       (n - 2 * s) * rows_[static_cast<std::size_t>(s - 1)][static_cast<std::size_t>(n - 1)];
            }
        }
    }
}

const BigInt& PeakCountTable::operator()(int s, int n) const
{
    if (s < 0 || s > sMax_ || n < 1 || n > nMax_) return zero_;
    return rows_[static_cast<std::size_t>(s)][static_cast<std::size_t>(n)];
}

PeakCountTable fTable(int sMax, int nMax) { return PeakCountTable(sMax, nMax); }

BigInt fOneClosed(int n)
{
    if (n < 1) throw std::invalid_argument("fOneClosed: n must be at least 1");
    if (n <= 2) return 0;
    return pow2(static_cast<unsigned>(2 * n - 3)) - n * pow2(static_cast<unsigned>(n - 2));
}

BigInt fFromDistribution(int n, int s)
{
    BigInt total = 0;
    for (const auto& [set, count] : distribution(n, s)) total += count;
    return total;
}

}  // namespace peaks
