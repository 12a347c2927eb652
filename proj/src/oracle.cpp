#include "peaks/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace peaks {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries))
{
    const int n = static_cast<int>(entries_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int a : entries_) {
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
            throw std::invalid_argument("Permutation: entries must be a rearrangement of 1..n");
        }
        seen[static_cast<std::size_t>(a)] = true;
    }
}

Permutation Permutation::parse(const std::string& digits)
{
    std::vector<int> v;
    for (char c : digits) {
        if (c < '1' || c > '9') throw std::invalid_argument("Permutation::parse: expected digits 1-9");
        v.push_back(c - '0');
    }
    return Permutation(std::move(v));
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::reversed() const
{
    Permutation out;
    out.entries_.assign(entries_.rbegin(), entries_.rend());
    return out;
}

Permutation Permutation::complemented() const
{
    Permutation out = *this;
    const int n = size();
    for (int& a : out.entries_) a = n + 1 - a;
    return out;
}

std::string Permutation::toString() const
{
    std::string s;
    const bool spaced = size() > 9;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (spaced && i) s += ' ';
        s += std::to_string(entries_[i]);
    }
    return s;
}

std::string PeakValleySignature::toString() const
{
    std::string s = "{";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(positions[i]);
    }
    s += "}";
    s += firstIsPeak ? ",peak-first" : ",valley-first";
    return s;
}

PeakSet peakSetOf(const Permutation& pi)
{
    std::vector<int> v;
    const auto a = pi.entries();
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i - 1] < a[i] && a[i] > a[i + 1]) v.push_back(static_cast<int>(i) + 1);
    }
    return PeakSet(std::move(v));
}

PeakValleySignature peakValleySetOf(const Permutation& pi)
{
    PeakValleySignature sig;
    const auto a = pi.entries();
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        const bool peak = a[i - 1] < a[i] && a[i] > a[i + 1];
        const bool valley = a[i - 1] > a[i] && a[i] < a[i + 1];
        if (!peak && !valley) continue;
        if (sig.positions.empty()) sig.firstIsPeak = peak;
        sig.positions.push_back(static_cast<int>(i) + 1);
    }
    return sig;
}

// ---------------------------------------------------------------------------
// Configuration

OracleConfig OracleConfig::fromEnvironment()
{
    OracleConfig cfg;
    if (const char* env = std::getenv("ORACLE_MAX_N"); env && *env) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) cfg.maxN = static_cast<int>(std::min<long>(v, simd::kMaxN));
    }
    cfg.kernel = simd::defaultKernel();
    return cfg;
}

void checkOracleSize(int n, const OracleConfig& cfg)
{
    if (n < 1) throw OracleRefusal("oracle: n must be at least 1");
    const int cap = std::min(cfg.maxN, simd::kMaxN);
    if (n > cap) {
        throw OracleRefusal("oracle: n=" + std::to_string(n) + " exceeds the brute-force cap of " +
                            std::to_string(cap) + " (" + std::to_string(n) +
                            "! permutations); raise ORACLE_MAX_N to run it explicitly");
    }
}

// ---------------------------------------------------------------------------
// CountTable

BigInt CountTable::count(const PeakSet& s) const
{
    const auto it = entries_.find(s);
    return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt CountTable::total() const
{
    BigInt t = 0;
    for (const auto& [s, c] : entries_) t += c;
    return t;
}

void CountTable::add(const PeakSet& s, const BigInt& c) { entries_[s] += c; }

// ---------------------------------------------------------------------------
// Enumeration

namespace {

constexpr std::size_t kBatch = 256;

struct Worker {
    int n;
    simd::Kernel kernel;
    std::vector<std::uint64_t> byPeak;
    std::vector<std::uint64_t> byPV;
    std::uint64_t visited = 0;
    std::vector<std::uint8_t> slots;
    std::vector<simd::ExtremaMasks> masks;
    std::size_t fill = 0;

    Worker(int n_, simd::Kernel k)
        : n(n_), kernel(k), byPeak(std::size_t{1} << n_, 0), byPV(std::size_t{2} << n_, 0),
          slots(kBatch * simd::kSlotBytes, 0), masks(kBatch)
    {
    }

    void push(const std::array<std::uint8_t, simd::kSlotBytes>& slot)
    {
        std::copy(slot.begin(), slot.end(), slots.begin() + static_cast<std::ptrdiff_t>(fill * simd::kSlotBytes));
        if (++fill == kBatch) flush();
    }

    void flush()
    {
        if (fill == 0) return;
        simd::classify(kernel, std::span<const std::uint8_t>(slots.data(), fill * simd::kSlotBytes), n,
                       std::span<simd::ExtremaMasks>(masks.data(), fill));
        for (std::size_t i = 0; i < fill; ++i) {
            const unsigned pk = masks[i].peaks;
            const unsigned pv = pk | masks[i].valleys;
            const unsigned lowest = pv & (0u - pv);
            const unsigned first = (pk & lowest) ? 1u : 0u;
            ++byPeak[pk];
            ++byPV[(pv << 1) | first];
        }
        visited += fill;
        fill = 0;
    }
};

// Enumerates every permutation whose first entries equal `prefix`, the rest
// in lexicographic order.
void enumeratePrefix(Worker& w, std::span<const std::uint8_t> prefix)
{
    const int n = w.n;
    std::array<std::uint8_t, simd::kSlotBytes> slot{};
    std::array<bool, simd::kMaxN + 1> used{};
    std::size_t k = 0;
    for (std::uint8_t a : prefix) {
        slot[k++] = a;
        used[a] = true;
    }
    for (int v = 1; v <= n; ++v) {
        if (!used[static_cast<std::size_t>(v)]) slot[k++] = static_cast<std::uint8_t>(v);
    }
    auto* tailBegin = slot.data() + prefix.size();
    auto* tailEnd = slot.data() + n;
    do {
        w.push(slot);
    } while (std::next_permutation(tailBegin, tailEnd));
}

}  // namespace

Histogram enumerateHistogram(int n, const OracleConfig& cfg)
{
    checkOracleSize(n, cfg);

    std::vector<std::array<std::uint8_t, 2>> tasks;
    std::size_t prefixLen = n >= 3 ? 2 : 0;
    if (prefixLen == 2) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 1; b <= n; ++b) {
                if (a != b) tasks.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
            }
        }
    } else {
        tasks.push_back({0, 0});
    }

    const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(tasks.size())));
    std::vector<Worker> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) workers.emplace_back(n, cfg.kernel);

    std::atomic<std::size_t> next{0};
    auto run = [&](Worker& w) {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            enumeratePrefix(w, std::span<const std::uint8_t>(tasks[i].data(), prefixLen));
        }
        w.flush();
    };
    if (threads == 1) {
        run(workers[0]);
    } else {
        std::vector<std::jthread> pool;
        for (auto& w : workers) pool.emplace_back([&run, &w] { run(w); });
    }

    Histogram h;
    h.n = n;
    h.byPeakMask.assign(std::size_t{1} << n, 0);
    h.byPeakValley.assign(std::size_t{2} << n, 0);
    for (const auto& w : workers) {
        for (std::size_t i = 0; i < w.byPeak.size(); ++i) h.byPeakMask[i] += w.byPeak[i];
        for (std::size_t i = 0; i < w.byPV.size(); ++i) h.byPeakValley[i] += w.byPV[i];
        h.visited += w.visited;
    }
    return h;
}

CountTable bruteDistribution(int n, const OracleConfig& cfg)
{
    const Histogram h = enumerateHistogram(n, cfg);
    CountTable table(n);
    for (std::size_t m = 0; m < h.byPeakMask.size(); ++m) {
        if (h.byPeakMask[m] != 0) table.add(PeakSet::fromMask(static_cast<std::uint32_t>(m)), h.byPeakMask[m]);
    }
    return table;
}

BigInt bruteCount(const PeakSet& s, int n, const OracleConfig& cfg)
{
    checkOracleSize(n, cfg);
    if (!s.empty() && (s.positions().front() < 2 || s.max() > n - 1)) return 0;
    const Histogram h = enumerateHistogram(n, cfg);
    return h.byPeakMask[s.mask()];
}

BigInt brutePVCount(const std::vector<int>& positions, bool firstIsPeak, int n, const OracleConfig& cfg)
{
    checkOracleSize(n, cfg);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const int p = positions[i];
        if (p < 2 || p > n - 1 || (i > 0 && p <= positions[i - 1])) return 0;
        mask |= 1u << (p - 1);
    }
    if (positions.empty() && firstIsPeak) return 0;
    const Histogram h = enumerateHistogram(n, cfg);
    return h.byPeakValley[(static_cast<std::size_t>(mask) << 1) | (firstIsPeak ? 1u : 0u)];
}

std::vector<Permutation> brutePermutations(const PeakSet& s, int n, const OracleConfig& cfg)
{
    checkOracleSize(n, cfg);
    std::vector<int> a(static_cast<std::size_t>(n));
    std::iota(a.begin(), a.end(), 1);
    std::vector<Permutation> out;
    do {
        Permutation pi(a);
        if (peakSetOf(pi) == s) out.push_back(std::move(pi));
    } while (std::next_permutation(a.begin(), a.end()));
    return out;
}

BigInt bruteCountByPeakNumber(int s, int n, const OracleConfig& cfg)
{
    const Histogram h = enumerateHistogram(n, cfg);
    std::uint64_t total = 0;
    for (std::size_t m = 0; m < h.byPeakMask.size(); ++m) {
        if (std::popcount(static_cast<unsigned>(m)) == s) total += h.byPeakMask[m];
    }
    return total;
}

}  // namespace peaks
