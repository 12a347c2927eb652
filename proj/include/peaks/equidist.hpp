#pragma once

// Which peak sets of a given size maximize #P(S;n), and whether the
// maximizers are evenly spaced (Turán compositions of a specific shape).

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "peaks/core.hpp"

namespace peaks {

/// Admissible S in [2, n-1] with #S = s, lexicographic.
std::vector<PeakSet> admissibleSetsOfSize(int n, int s);

/// (S, #P(S;n)) for every admissible S in [2, n-1] with #S = s.
std::vector<std::pair<PeakSet, BigInt>> distribution(int n, int s);

class EmptyDomain : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// All S attaining the largest count. Throws EmptyDomain when no admissible
/// set of size s exists.
std::vector<PeakSet> maximizers(int n, int s);

/// Turán compositions ((q+1)^a, q^b, (q+1)^c) of `total` into `parts` parts
/// with as many of a, c positive as the number of (q+1)'s allows.
std::vector<Composition> balancedCompositions(int total, int parts);
/// kappa is one of balancedCompositions(kappa.total(), kappa.partCount()).
bool isBalancedShape(const Composition& kappa);

struct SizeCheck {
    int s = 0;
    BigInt maxCount;
    std::vector<PeakSet> maximizers;
    bool allTuran = false;        // part (a)
    bool matchesShape = false;    // part (b): maximizers == balancedCompositions
};

struct EquidistributionReport {
    int n = 0;
    std::vector<SizeCheck> sizes;
    BigInt globalMax;
    std::vector<PeakSet> globalMaximizers;
    bool globalShapeOk = false;     // every global maximizer Turán and balanced
    int threesAvailable = 0;        // most 3's in any balanced composition of n+1 (q >= 2)
    int threesAttained = 0;         // most 3's among global maximizers
    std::vector<std::string> anomalies;
    /// Observations that do not contradict the conjecture (count ties).
    std::vector<std::string> notes;

    bool confirmed() const noexcept { return anomalies.empty(); }
};

/// Parts (a) and (b) for every s with admissible sets, plus the clause about
/// the global maximizers having the most 3's. Never throws on a failed
/// conjecture; failures land in `anomalies`.
EquidistributionReport checkEquidistribution(int n, unsigned threads = 1);

struct MeanPartSize {
    BigRational unweighted;
    BigRational permutationWeighted;
};

/// Mean part size of kappa(S) over admissible S in [2, n-1], uniformly and
/// weighted by #P(S;n).
MeanPartSize meanPartSize(int n);

}  // namespace peaks
