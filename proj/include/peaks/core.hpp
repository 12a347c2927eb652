#pragma once

// Exact arithmetic foundation: generalized binomial coefficients, peak sets,
// integer-valued polynomials in shifted binomial bases, and compositions.

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace peaks {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Generalized binomial coefficient t(t-1)...(t-k+1)/k!. Defined for every
/// integer t, including negative ones. Throws std::invalid_argument if k < 0.
BigInt binomial(std::int64_t top, std::int64_t k);

/// Binomial with the textbook convention: 0 when k < 0, or when top >= 0 and
/// k > top. Otherwise identical to binomial().
BigInt choose(std::int64_t top, std::int64_t k);

/// 2^e as an exact integer.
BigInt pow2(unsigned e);

std::string toDecimal(const BigInt& value);

/// Sorted set of peak positions {i_1 < ... < i_s}.
///
/// Positions are positive. Position 1 is representable because the counting
/// recursion forms S ∪ {m-1} with m = 2; such sets are simply inadmissible.
class PeakSet {
public:
    PeakSet() = default;
    PeakSet(std::initializer_list<int> positions);
    explicit PeakSet(std::vector<int> positions);

    std::span<const int> positions() const noexcept { return positions_; }
    int size() const noexcept { return static_cast<int>(positions_.size()); }
    bool empty() const noexcept { return positions_.empty(); }
    /// Largest position; 0 for the empty set.
    int max() const noexcept { return positions_.empty() ? 0 : positions_.back(); }
    bool contains(int position) const noexcept;

    PeakSet with(int position) const;
    PeakSet without(int position) const;
    /// { n+1-i : i in S }, the peak set of the reversed permutation.
    PeakSet reflected(int n) const;

    /// Bit (i-1) set for every position i.
    std::uint32_t mask() const noexcept;
    static PeakSet fromMask(std::uint32_t mask);

    std::string toString() const;

    friend bool operator==(const PeakSet&, const PeakSet&) = default;
    friend auto operator<=>(const PeakSet&, const PeakSet&) = default;

private:
    std::vector<int> positions_;
};

/// Peak set whose upper elements track n: {i_1 < ... < i_s < n-j_t < ... < n-j_1}.
class SymbolicPeakSet {
public:
    SymbolicPeakSet() = default;
    /// low strictly increasing with min >= 2; highOffsets strictly
    /// decreasing with min >= 1 (so j_t comes first).
    SymbolicPeakSet(std::vector<int> low, std::vector<int> highOffsets);

    std::span<const int> low() const noexcept { return low_; }
    std::span<const int> highOffsets() const noexcept { return high_; }
    int lowCount() const noexcept { return static_cast<int>(low_.size()); }
    int highCount() const noexcept { return static_cast<int>(high_.size()); }
    int size() const noexcept { return lowCount() + highCount(); }
    bool isConstant() const noexcept { return high_.empty(); }

    /// Smallest n for which the low and high parts cannot collide.
    int minN() const noexcept;
    /// The concrete set at n; requires n >= minN().
    PeakSet instantiate(int n) const;

    /// Comma-separated tokens, e.g. "2,5,n-1".
    std::string toString() const;
    /// Inverse of toString(); throws std::invalid_argument on bad tokens.
    static SymbolicPeakSet parse(const std::string& text);

    friend bool operator==(const SymbolicPeakSet&, const SymbolicPeakSet&) = default;

private:
    std::vector<int> low_;
    std::vector<int> high_;
};

/// Integer-valued polynomial in n written as sum_k c_k * C(n - shift, k).
///
/// Coefficients are normalized (no trailing zero); the zero polynomial has an
/// empty list. Equality compares the B_0 expansions, so two polynomials are
/// equal iff they agree as functions, regardless of shift.
class BinomialPolynomial {
public:
    BinomialPolynomial() = default;
    BinomialPolynomial(int shift, std::vector<BigInt> coeffs);

    static BinomialPolynomial constant(const BigInt& c);
    /// scalar * C(n - shift, k)
    static BinomialPolynomial term(const BigInt& scalar, int shift, int k);

    int shift() const noexcept { return shift_; }
    std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool isZero() const noexcept { return coeffs_.empty(); }

    BigInt operator()(std::int64_t n) const;
    BinomialPolynomial rebased(int newShift) const;

    /// "10*C(n-6,0) + 25*C(n-6,1) + ..."
    std::string toString() const;

    friend bool operator==(const BinomialPolynomial& a, const BinomialPolynomial& b);

private:
    int shift_ = 0;
    std::vector<BigInt> coeffs_;
};

BigInt evaluate(const BinomialPolynomial& p, std::int64_t n);
BinomialPolynomial rebase(const BinomialPolynomial& p, int newShift);

/// Exact linear combination sum scalar_i * p_i, returned in B_0.
BinomialPolynomial polyLinComb(std::span<const std::pair<BigInt, BinomialPolynomial>> terms);
BinomialPolynomial polyLinComb(std::initializer_list<std::pair<BigInt, BinomialPolynomial>> terms);

/// Composition (k_1, ..., k_r) of a positive total.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    int partCount() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return total_; }
    int occurrences(int part) const noexcept;

    std::string toString() const;

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    std::vector<int> parts_;
    int total_ = 0;
};

/// kappa(S) for S in [n]: parts i_j - i_{j-1} with sentinels 0 and n+1.
Composition compositionOf(const PeakSet& s, int n);
/// Partial sums of all but the last part.
PeakSet toPeakSet(const Composition& kappa);

/// All parts pairwise within 1 of each other.
bool isTuran(const Composition& kappa);
/// q in total = q*k + r with 0 <= r < k, k the number of parts.
int quotient(const Composition& kappa);

}  // namespace peaks
