#pragma once

// Brute-force ground truth. Enumerates S_n and classifies every permutation
// by peak set, peak-valley signature and number of peaks.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "peaks/core.hpp"
#include "peaks/kernels.hpp"

namespace peaks {

/// A rearrangement a_1 ... a_n of 1 ... n.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless entries is a permutation of 1..n.
    explicit Permutation(std::vector<int> entries);
    static Permutation parse(const std::string& digits);
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const int> entries() const noexcept { return entries_; }
    /// 1-based access.
    int at(int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    Permutation reversed() const;
    /// a_i -> n+1-a_i; swaps peaks and valleys.
    Permutation complemented() const;

    std::string toString() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> entries_;
};

/// Peaks and valleys together, plus the type of the smallest position.
/// The empty signature carries firstIsPeak == false.
struct PeakValleySignature {
    std::vector<int> positions;
    bool firstIsPeak = false;

    std::string toString() const;

    friend bool operator==(const PeakValleySignature&, const PeakValleySignature&) = default;
    friend auto operator<=>(const PeakValleySignature&, const PeakValleySignature&) = default;
};

PeakSet peakSetOf(const Permutation& pi);
PeakValleySignature peakValleySetOf(const Permutation& pi);

/// Raised when an enumeration would exceed the configured size cap.
class OracleRefusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultOracleCap = 11;

struct OracleConfig {
    int maxN = kDefaultOracleCap;
    unsigned threads = 1;
    simd::Kernel kernel = simd::Kernel::Scalar;

    /// Cap from ORACLE_MAX_N (default 11), best available kernel (or
    /// PEAKS_KERNEL), one thread.
    static OracleConfig fromEnvironment();
};

/// Peak-set counts for one n.
class CountTable {
public:
    CountTable() = default;
    explicit CountTable(int n) : n_(n) {}

    int n() const noexcept { return n_; }
    const std::map<PeakSet, BigInt>& entries() const noexcept { return entries_; }
    /// 0 for sets that never occur.
    BigInt count(const PeakSet& s) const;
    BigInt total() const;

    void add(const PeakSet& s, const BigInt& c);

private:
    int n_ = 0;
    std::map<PeakSet, BigInt> entries_;
};

/// Raw per-mask tallies from one full pass over S_n.
struct Histogram {
    int n = 0;
    /// Indexed by peak mask (bit i-1 for position i).
    std::vector<std::uint64_t> byPeakMask;
    /// Indexed by (extrema mask << 1) | firstIsPeak.
    std::vector<std::uint64_t> byPeakValley;
    std::uint64_t visited = 0;
};

/// One pass over all n! permutations, partitioned by the first two entries
/// across cfg.threads workers. Deterministic for any thread count.
Histogram enumerateHistogram(int n, const OracleConfig& cfg);

BigInt bruteCount(const PeakSet& s, int n, const OracleConfig& cfg = OracleConfig::fromEnvironment());
CountTable bruteDistribution(int n, const OracleConfig& cfg = OracleConfig::fromEnvironment());
BigInt brutePVCount(const std::vector<int>& positions, bool firstIsPeak, int n,
                    const OracleConfig& cfg = OracleConfig::fromEnvironment());
/// Permutations with the given peak set, in lexicographic order.
std::vector<Permutation> brutePermutations(const PeakSet& s, int n,
                                           const OracleConfig& cfg = OracleConfig::fromEnvironment());
/// Number of permutations with exactly s peaks.
BigInt bruteCountByPeakNumber(int s, int n, const OracleConfig& cfg = OracleConfig::fromEnvironment());

/// Throws OracleRefusal unless 1 <= n <= min(cfg.maxN, 16).
void checkOracleSize(int n, const OracleConfig& cfg);

}  // namespace peaks
