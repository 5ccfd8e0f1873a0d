#pragma once

// Normalized partition polynomials on [0, 1] and their exact integrals.

#include "partpoly/exactmath.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// f_lambda / length(lambda), restricted to [0, 1].
class NormalizedPoly {
public:
    /// Throws std::domain_error for the empty partition.
    explicit NormalizedPoly(Partition base);

    const Partition& base() const { return base_; }
    const BigInt& length() const { return length_; }

    /// Exact value at x in [0, 1]; std::domain_error outside.
    BigRational operator()(const BigRational& x) const;

    /// (1/length) * sum m_i / (i + 1).
    BigRational integral() const;

private:
    Partition base_;
    BigInt length_;
};

BigRational normalized_eval(const Partition& lambda, const BigRational& x);

/// Integral of the normalized polynomial over [0, 1]. Lies in (0, 1/2],
/// with 1/2 exactly for all-ones partitions. Throws std::domain_error for
/// the empty partition.
BigRational integral(const Partition& lambda);

} // namespace partpoly
