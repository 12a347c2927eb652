#include "peaks/equidist.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "peaks/counting.hpp"

namespace peaks {

namespace {

void walkGaps(int n, int remaining, int start, std::vector<int>& current, std::vector<PeakSet>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    // the last of the remaining peaks must still fit at or below n-1
    for (int x = start; x + 2 * (remaining - 1) <= n - 1; ++x) {
        current.push_back(x);
        walkGaps(n, remaining - 1, x + 2, current, out);
        current.pop_back();
    }
}

std::string joinSets(const std::vector<PeakSet>& sets)
{
    std::string s;
    for (const auto& p : sets) {
        if (!s.empty()) s += ' ';
        s += p.toString();
    }
    return s;
}

SizeCheck checkSize(int n, int s)
{
    SizeCheck check;
    check.s = s;
    const auto dist = distribution(n, s);
    for (const auto& [set, count] : dist) {
        if (check.maximizers.empty() || count > check.maxCount) {
            check.maxCount = count;
            check.maximizers = {set};
        } else if (count == check.maxCount) {
            check.maximizers.push_back(set);
        }
    }
    check.allTuran = std::all_of(check.maximizers.begin(), check.maximizers.end(),
                                 [n](const PeakSet& p) { return isTuran(compositionOf(p, n)); });
    std::set<Composition> got;
    for (const auto& p : check.maximizers) got.insert(compositionOf(p, n));
    const auto want = balancedCompositions(n + 1, s + 1);
    check.matchesShape = got == std::set<Composition>(want.begin(), want.end());
    return check;
}

}  // namespace

std::vector<PeakSet> admissibleSetsOfSize(int n, int s)
{
    std::vector<PeakSet> out;
    if (n < 1 || s < 0) return out;
    std::vector<int> current;
    walkGaps(n, s, 2, current, out);
    return out;
}

std::vector<std::pair<PeakSet, BigInt>> distribution(int n, int s)
{
    std::vector<std::pair<PeakSet, BigInt>> out;
    for (auto& set : admissibleSetsOfSize(n, s)) {
        BigInt c = countPermutations(set, n);
        out.emplace_back(std::move(set), std::move(c));
    }
    return out;
}

std::vector<PeakSet> maximizers(int n, int s)
{
    const auto dist = distribution(n, s);
    if (dist.empty()) {
        throw EmptyDomain("maximizers: no admissible peak set of size " + std::to_string(s) + " in [" +
                          std::to_string(n) + "]");
    }
    BigInt best = dist.front().second;
    for (const auto& entry : dist) best = std::max(best, entry.second);
    std::vector<PeakSet> out;
    for (const auto& [set, count] : dist) {
        if (count == best) out.push_back(set);
    }
    return out;
}

std::vector<Composition> balancedCompositions(int total, int parts)
{
    std::vector<Composition> out;
    if (parts < 1 || total < parts) return out;
    const int q = total / parts;
    const int r = total % parts;
    auto build = [&](int front, int back) {
        std::vector<int> v(static_cast<std::size_t>(front), q + 1);
        v.insert(v.end(), static_cast<std::size_t>(parts - r), q);
        v.insert(v.end(), static_cast<std::size_t>(back), q + 1);
        out.emplace_back(std::move(v));
    };
    if (r == 0) {
        build(0, 0);
    } else if (r == 1) {
        build(1, 0);
        if (parts > 1) build(0, 1);
    } else {
        for (int front = 1; front < r; ++front) build(front, r - front);
    }
    return out;
}

bool isBalancedShape(const Composition& kappa)
{
    const auto all = balancedCompositions(kappa.total(), kappa.partCount());
    return std::find(all.begin(), all.end(), kappa) != all.end();
}

EquidistributionReport checkEquidistribution(int n, unsigned threads)
{
    if (n < 2) throw std::invalid_argument("checkEquidistribution: n must be at least 2");
    EquidistributionReport report;
    report.n = n;

    const int maxSize = (n - 1) / 2;
    if (threads > 1) {
        std::vector<std::future<SizeCheck>> futures;
        for (int s = 1; s <= maxSize; ++s) futures.push_back(std::async(std::launch::async, checkSize, n, s));
        for (auto& f : futures) report.sizes.push_back(f.get());
    } else {
        for (int s = 1; s <= maxSize; ++s) report.sizes.push_back(checkSize(n, s));
    }

    for (const auto& c : report.sizes) {
        if (!c.allTuran) {
            report.anomalies.push_back("n=" + std::to_string(n) + " s=" + std::to_string(c.s) +
                                       ": non-Turán maximizer among " + joinSets(c.maximizers));
        }
        if (!c.matchesShape) {
            report.anomalies.push_back("n=" + std::to_string(n) + " s=" + std::to_string(c.s) +
                                       ": maximizers " + joinSets(c.maximizers) +
                                       " differ from the balanced compositions");
        }
    }

    // Global maximum over every size, the empty set included.
    std::vector<std::pair<PeakSet, BigInt>> all;
    for (int s = 0; s <= maxSize; ++s) {
        auto d = distribution(n, s);
        all.insert(all.end(), std::make_move_iterator(d.begin()), std::make_move_iterator(d.end()));
    }
    for (const auto& [set, count] : all) report.globalMax = std::max(report.globalMax, count);
    for (const auto& [set, count] : all) {
        if (count == report.globalMax) report.globalMaximizers.push_back(set);
    }

    report.globalShapeOk = true;
    for (const auto& set : report.globalMaximizers) {
        const auto kappa = compositionOf(set, n);
        if (!isTuran(kappa) || !isBalancedShape(kappa)) report.globalShapeOk = false;
        report.threesAttained = std::max(report.threesAttained, kappa.occurrences(3));
    }
    std::vector<Composition> mostThrees;
    for (int parts = 1; parts <= n + 1; ++parts) {
        if ((n + 1) / parts < 2) break;
        for (const auto& kappa : balancedCompositions(n + 1, parts)) {
            const int threes = kappa.occurrences(3);
            if (threes > report.threesAvailable) {
                report.threesAvailable = threes;
                mostThrees.clear();
            }
            if (threes == report.threesAvailable) mostThrees.push_back(kappa);
        }
    }

    if (!report.globalShapeOk) {
        report.anomalies.push_back("n=" + std::to_string(n) + ": global maximizers " +
                                   joinSets(report.globalMaximizers) + " are not all balanced Turán");
    }
    if (report.threesAttained != report.threesAvailable) {
        report.anomalies.push_back("n=" + std::to_string(n) + ": global maximizers reach " +
                                   std::to_string(report.threesAttained) + " parts equal to 3, balanced shapes allow " +
                                   std::to_string(report.threesAvailable));
    }
    for (const auto& set : report.globalMaximizers) {
        const auto kappa = compositionOf(set, n);
        if (kappa.occurrences(3) < report.threesAvailable) {
            report.notes.push_back("n=" + std::to_string(n) + ": " + set.toString() + " " + kappa.toString() +
                                   " ties for the maximum with fewer 3's");
        }
    }
    for (const auto& kappa : mostThrees) {
        const auto set = toPeakSet(kappa);
        if (std::find(report.globalMaximizers.begin(), report.globalMaximizers.end(), set) ==
            report.globalMaximizers.end()) {
            report.notes.push_back("n=" + std::to_string(n) + ": " + kappa.toString() + " has the most 3's but count " +
                                   countPermutations(set, n).str() + " < " + report.globalMax.str());
        }
    }
    return report;
}

MeanPartSize meanPartSize(int n)
{
    if (n < 2) throw std::invalid_argument("meanPartSize: n must be at least 2");
    BigInt setCount = 0;
    BigInt partCount = 0;
    BigInt weightedTotal = 0;
    BigInt weightedParts = 0;
    for (int s = 0; s <= (n - 1) / 2; ++s) {
        for (const auto& [set, count] : distribution(n, s)) {
            setCount += 1;
            partCount += s + 1;
            weightedTotal += count * (n + 1);
            weightedParts += count * (s + 1);
        }
    }
    MeanPartSize out;
    out.unweighted = BigRational(setCount * (n + 1), partCount);
    out.permutationWeighted = BigRational(weightedTotal, weightedParts);
    return out;
}

}  // namespace peaks
