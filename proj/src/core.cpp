#include "peaks/core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace peaks {

BigInt binomial(std::int64_t top, std::int64_t k)
{
    if (k < 0) {
        throw std::invalid_argument("binomial: negative lower argument " + std::to_string(k));
    }
    // Each partial product C(top, i+1) is itself an integer, so the division is exact.
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (top - i);
        result /= (i + 1);
        if (result == 0) break;
    }
    return result;
}

BigInt choose(std::int64_t top, std::int64_t k)
{
    if (k < 0 || (top >= 0 && k > top)) return 0;
    return binomial(top, k);
}

BigInt pow2(unsigned e)
{
    BigInt r = 1;
    r <<= e;
    return r;
}

std::string toDecimal(const BigInt& value) { return value.str(); }

// ---------------------------------------------------------------------------
// PeakSet

PeakSet::PeakSet(std::initializer_list<int> positions)
    : PeakSet(std::vector<int>(positions))
{
}

PeakSet::PeakSet(std::vector<int> positions)
    : positions_(std::move(positions))
{
    std::sort(positions_.begin(), positions_.end());
    if (std::adjacent_find(positions_.begin(), positions_.end()) != positions_.end()) {
        throw std::invalid_argument("PeakSet: duplicate position");
    }
    if (!positions_.empty() && positions_.front() < 1) {
        throw std::invalid_argument("PeakSet: positions must be positive");
    }
}

bool PeakSet::contains(int position) const noexcept
{
    return std::binary_search(positions_.begin(), positions_.end(), position);
}

PeakSet PeakSet::with(int position) const
{
    if (contains(position)) return *this;
    auto v = positions_;
    v.push_back(position);
    return PeakSet(std::move(v));
}

PeakSet PeakSet::without(int position) const
{
    auto v = positions_;
    std::erase(v, position);
    PeakSet out;
    out.positions_ = std::move(v);
    return out;
}

PeakSet PeakSet::reflected(int n) const
{
    std::vector<int> v;
    v.reserve(positions_.size());
    for (int i : positions_) v.push_back(n + 1 - i);
    return PeakSet(std::move(v));
}

std::uint32_t PeakSet::mask() const noexcept
{
    std::uint32_t m = 0;
    for (int i : positions_) m |= 1u << (i - 1);
    return m;
}

PeakSet PeakSet::fromMask(std::uint32_t mask)
{
    PeakSet out;
    for (int bit = 0; mask != 0; ++bit, mask >>= 1) {
        if (mask & 1u) out.positions_.push_back(bit + 1);
    }
    return out;
}

std::string PeakSet::toString() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(positions_[i]);
    }
    return s + "}";
}

// ---------------------------------------------------------------------------
// SymbolicPeakSet

SymbolicPeakSet::SymbolicPeakSet(std::vector<int> low, std::vector<int> highOffsets)
    : low_(std::move(low)), high_(std::move(highOffsets))
{
    for (std::size_t i = 0; i < low_.size(); ++i) {
        if (low_[i] < 2 || (i > 0 && low_[i] <= low_[i - 1])) {
            throw std::invalid_argument("SymbolicPeakSet: low part must be strictly increasing and >= 2");
        }
    }
    for (std::size_t i = 0; i < high_.size(); ++i) {
        if (high_[i] < 1 || (i > 0 && high_[i] >= high_[i - 1])) {
            throw std::invalid_argument(
                "SymbolicPeakSet: high offsets must be strictly decreasing and >= 1");
        }
    }
}

int SymbolicPeakSet::minN() const noexcept
{
    const bool hasLow = !low_.empty();
    const bool hasHigh = !high_.empty();
    if (hasLow && hasHigh) return low_.back() + high_.front() + 2;
    if (hasLow) return low_.back() + 1;
    if (hasHigh) return high_.front() + 2;
    return 1;
}

PeakSet SymbolicPeakSet::instantiate(int n) const
{
    if (n < minN()) {
        throw std::invalid_argument("SymbolicPeakSet::instantiate: n=" + std::to_string(n) +
                                    " below minimum " + std::to_string(minN()) + " for " +
                                    toString());
    }
    std::vector<int> v = low_;
    for (int j : high_) v.push_back(n - j);
    return PeakSet(std::move(v));
}

std::string SymbolicPeakSet::toString() const
{
    std::string s;
    for (int i : low_) {
        if (!s.empty()) s += ',';
        s += std::to_string(i);
    }
    for (int j : high_) {
        if (!s.empty()) s += ',';
        s += "n-" + std::to_string(j);
    }
    return s;
}

namespace {

int parsePositive(const std::string& token, const std::string& whole)
{
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        })) {
        throw std::invalid_argument("unknown set token '" + whole + "'");
    }
    if (token.size() > 6) throw std::invalid_argument("set token out of range '" + whole + "'");
    const int v = std::stoi(token);
    if (v < 1) throw std::invalid_argument("set token must be positive '" + whole + "'");
    return v;
}

}  // namespace

SymbolicPeakSet SymbolicPeakSet::parse(const std::string& text)
{
    std::vector<int> low;
    std::vector<int> high;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::string t;
        for (char c : token) {
            if (!std::isspace(static_cast<unsigned char>(c))) t += c;
        }
        if (t.empty()) {
            if (text.find_first_not_of(" \t") == std::string::npos) break;
            throw std::invalid_argument("empty set token in '" + text + "'");
        }
        if (t.size() >= 2 && t[0] == 'n' && t[1] == '-') {
            high.push_back(parsePositive(t.substr(2), t));
        } else {
            low.push_back(parsePositive(t, t));
        }
    }
    std::sort(low.begin(), low.end());
    std::sort(high.begin(), high.end(), std::greater<>());
    if (std::adjacent_find(low.begin(), low.end()) != low.end() ||
        std::adjacent_find(high.begin(), high.end()) != high.end()) {
        throw std::invalid_argument("duplicate set token in '" + text + "'");
    }
    return SymbolicPeakSet(std::move(low), std::move(high));
}

// ---------------------------------------------------------------------------
// BinomialPolynomial

namespace {

void trimTrailingZeros(std::vector<BigInt>& c)
{
    while (!c.empty() && c.back() == 0) c.pop_back();
}

}  // namespace

BinomialPolynomial::BinomialPolynomial(int shift, std::vector<BigInt> coeffs)
    : shift_(shift), coeffs_(std::move(coeffs))
{
    trimTrailingZeros(coeffs_);
}

BinomialPolynomial BinomialPolynomial::constant(const BigInt& c)
{
    return BinomialPolynomial(0, {c});
}

BinomialPolynomial BinomialPolynomial::term(const BigInt& scalar, int shift, int k)
{
    if (k < 0) throw std::invalid_argument("BinomialPolynomial::term: negative index");
    std::vector<BigInt> c(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = scalar;
    return BinomialPolynomial(shift, std::move(c));
}

BigInt BinomialPolynomial::operator()(std::int64_t n) const
{
    const std::int64_t t = n - shift_;
    BigInt basis = 1;  // C(t, 0)
    BigInt sum = 0;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k > 0) {
            basis *= (t - static_cast<std::int64_t>(k) + 1);
            basis /= static_cast<std::int64_t>(k);
        }
        if (coeffs_[k] != 0) sum += coeffs_[k] * basis;
    }
    return sum;
}

BinomialPolynomial BinomialPolynomial::rebased(int newShift) const
{
    if (newShift == shift_ || coeffs_.empty()) return BinomialPolynomial(newShift, coeffs_);
    // C(n-a, k) = sum_j C(n-b, j) C(b-a, k-j)
    const std::int64_t delta = static_cast<std::int64_t>(newShift) - shift_;
    const std::size_t len = coeffs_.size();
    std::vector<BigInt> bridge(len);
    bridge[0] = 1;
    for (std::size_t i = 1; i < len; ++i) {
        bridge[i] = bridge[i - 1] * (delta - static_cast<std::int64_t>(i) + 1);
        bridge[i] /= static_cast<std::int64_t>(i);
    }
    std::vector<BigInt> out(len);
    for (std::size_t j = 0; j < len; ++j) {
        for (std::size_t k = j; k < len; ++k) {
            if (coeffs_[k] != 0 && bridge[k - j] != 0) out[j] += coeffs_[k] * bridge[k - j];
        }
    }
    return BinomialPolynomial(newShift, std::move(out));
}

std::string BinomialPolynomial::toString() const
{
    if (coeffs_.empty()) return "0";
    std::string base = shift_ == 0 ? "n"
                       : shift_ > 0 ? "n-" + std::to_string(shift_)
                                    : "n+" + std::to_string(-shift_);
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        std::string c = coeffs_[k].str();
        if (!s.empty()) {
            if (c[0] == '-') {
                s += " - ";
                c.erase(0, 1);
            } else {
                s += " + ";
            }
        }
        s += c + "*C(" + base + "," + std::to_string(k) + ")";
    }
    return s;
}

bool operator==(const BinomialPolynomial& a, const BinomialPolynomial& b)
{
    if (a.shift_ == b.shift_) return a.coeffs_ == b.coeffs_;
    return a.rebased(0).coeffs_ == b.rebased(0).coeffs_;
}

BigInt evaluate(const BinomialPolynomial& p, std::int64_t n) { return p(n); }

BinomialPolynomial rebase(const BinomialPolynomial& p, int newShift) { return p.rebased(newShift); }

BinomialPolynomial polyLinComb(std::span<const std::pair<BigInt, BinomialPolynomial>> terms)
{
    std::vector<BigInt> acc;
    for (const auto& [scalar, poly] : terms) {
        if (scalar == 0 || poly.isZero()) continue;
        const auto b0 = poly.rebased(0);
        const auto c = b0.coeffs();
        if (acc.size() < c.size()) acc.resize(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) acc[k] += scalar * c[k];
    }
    return BinomialPolynomial(0, std::move(acc));
}

BinomialPolynomial polyLinComb(std::initializer_list<std::pair<BigInt, BinomialPolynomial>> terms)
{
    return polyLinComb(std::span<const std::pair<BigInt, BinomialPolynomial>>(terms.begin(), terms.size()));
}

// ---------------------------------------------------------------------------
// Composition

Composition::Composition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
    }
    total_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::occurrences(int part) const noexcept
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Composition::toString() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Composition compositionOf(const PeakSet& s, int n)
{
    if (n < 1 || n < s.max()) {
        throw std::invalid_argument("compositionOf: n=" + std::to_string(n) + " smaller than max " +
                                    s.toString());
    }
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(s.size()) + 1);
    int prev = 0;
    for (int i : s.positions()) {
        parts.push_back(i - prev);
        prev = i;
    }
    parts.push_back(n + 1 - prev);
    return Composition(std::move(parts));
}

PeakSet toPeakSet(const Composition& kappa)
{
    std::vector<int> v;
    int sum = 0;
    const auto parts = kappa.parts();
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        sum += parts[j];
        v.push_back(sum);
    }
    return PeakSet(std::move(v));
}

bool isTuran(const Composition& kappa)
{
    const auto parts = kappa.parts();
    if (parts.empty()) return true;
    const auto [lo, hi] = std::minmax_element(parts.begin(), parts.end());
    return *hi - *lo <= 1;
}

int quotient(const Composition& kappa)
{
    if (kappa.partCount() == 0) throw std::invalid_argument("quotient: empty composition");
    return kappa.total() / kappa.partCount();
}

}  // namespace peaks
