#pragma once

// Avg(n, l): the mean integral over all partitions of n into l parts,
// computed from part-multiplicity profiles rather than enumeration.

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "partpoly/exactmath.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// Total multiplicity of each part size across all partitions of n into
/// l parts. counts[i - 1] is the number of parts equal to i; the combined
/// partition with these multiplicities has length l * p(n, l).
struct MultiplicityProfile {
    unsigned n = 0;
    unsigned length = 0;
    std::vector<BigInt> counts;

    Partition combined() const { return Partition::from_multiplicities(counts); }
};

/// p(n, l) for n, l <= n_max plus a cache of multiplicity profiles.
/// Profile computation takes an internal lock; p lookups are lock-free.
class CountTable {
public:
    explicit CountTable(unsigned n_max);
    CountTable(unsigned n_max, unsigned length_max);

    unsigned n_max() const { return counts_.n_max(); }
    unsigned length_max() const { return counts_.length_max(); }

    const BigInt& p(long n, long l) const { return counts_.at(n, l); }

    /// counts[i-1] = sum_{j >= 1} p(n - j i, l - j), with p(0, 0) = 1.
    MultiplicityProfile profile(unsigned n, unsigned l) const;

private:
    MultiplicityProfile compute(unsigned n, unsigned l) const;

    PartitionCountTable counts_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<unsigned, unsigned>, MultiplicityProfile> profiles_;
};

MultiplicityProfile multiplicity_profile(unsigned n, unsigned length);

/// Integral of the combined partition for (n, l). Requires 1 <= l <= n.
BigRational avg(unsigned n, unsigned length);
BigRational avg(const CountTable& table, unsigned n, unsigned length);

/// Mean of integral(lambda) over enumerate(n, length). Slow reference path.
BigRational avg_by_enumeration(unsigned n, unsigned length);

struct AvgReport {
    unsigned n = 0;
    std::vector<BigRational> values;       // values[l - 1] = Avg(n, l)
    std::vector<BigInt> partition_counts;  // partition_counts[l - 1] = p(n, l)
    bool monotone = true;
    /// Smallest l with Avg(n, l) > Avg(n, l + 1).
    std::optional<unsigned> first_violation;

    friend bool operator==(const AvgReport&, const AvgReport&) = default;
};

AvgReport avg_table(unsigned n);
AvgReport avg_table(const CountTable& table, unsigned n);

struct ConjectureScan {
    std::vector<AvgReport> reports; // n = 1..n_max
    bool all_monotone = true;
};

/// Avg tables for n = 1..n_max, cells spread over `jobs` threads.
/// Results do not depend on the number of jobs.
ConjectureScan check_conjecture(unsigned n_max, unsigned jobs = 1);

/// Avg(n, 2) in closed form: (H_n - 1) / (2 floor(n/2)) for odd n and
/// (H_n - 1 + 2/(n+2)) / (2 floor(n/2)) for even n, where the repeated part
/// n/2 adds one more 1/(n/2 + 1). Throws std::domain_error for n < 2.
BigRational avg2_closed_form(unsigned n);

/// Floating estimate built from the line g(x) = n/2 - 1 - (n/2) x / (n - 2):
///   ((n/2 - 1) ln(n-1) - ((n-2) - ln(n-1)) (n/2)/(n-2)) / (3 p(n, 3)).
/// Throws std::domain_error for n < 4.
double avg3_lower_bound(unsigned n);

} // namespace partpoly
