#pragma once

// Constructive approximation of any c in (0, 1/2) by integrals of
// normalized partition polynomials, with a certified error bound.

#include <cstddef>
#include <vector>

#include "partpoly/exactmath.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// <1^1, s^(s-1)>; its integral tends to 0. Throws for s < 2.
Partition alpha(unsigned s);

/// <1^(s-1), s^1>; its integral tends to 1/2. Throws for s < 2.
Partition beta(unsigned s);

struct PartitionSummary {
    std::size_t largest_part = 0;
    BigInt length;
    double length_log2 = 0.0;
    std::size_t support_size = 0;
};

PartitionSummary summarize(const Partition& lambda);

/// One bisection step r (1-based). The bracket is (alpha_r, beta_r), two
/// partitions of equal length whose integrals enclose the target;
/// delta_r = alpha_r (+) beta_r sits at the midpoint.
struct DensityStep {
    unsigned index = 0;
    PartitionSummary delta;
    BigRational integral;     // integral of delta_r
    BigRational error_bound;  // (b - a) / 2^r
    BigRational lower;        // integral of alpha_r
    BigRational upper;        // integral of beta_r
    BigInt bracket_length;    // length of alpha_r (== length of beta_r)
};

struct DensityTrace {
    BigRational target;
    BigRational epsilon;
    unsigned start_index = 0;  // s with integral(alpha(s)) < c < integral(beta(s))
    BigRational start_lower;   // a
    BigRational start_upper;   // b
    std::vector<DensityStep> steps;
    Partition result;
    BigRational achieved_error;
    bool exact_hit = false;
};

/// Bisects between alpha(s) and beta(s) for the smallest s that strictly
/// encloses c, merging the bracket ends with (+) so both ends keep equal
/// length. Stops on an exact hit or once (b - a) / 2^r < epsilon; the
/// result then satisfies |integral(result) - c| < epsilon.
///
/// Throws std::domain_error unless 0 < c < 1/2 and epsilon > 0.
DensityTrace approximate(const BigRational& c, const BigRational& epsilon);

} // namespace partpoly
