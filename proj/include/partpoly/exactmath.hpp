#pragma once

// Exact arithmetic support: big integers and rationals (GMP-backed),
// Stirling numbers of the second kind, harmonic numbers and primes.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace partpoly {

using BigInt = mpz_class;

// mpq_class keeps itself canonical (gcd 1, positive denominator) after
// every arithmetic operation; values built from raw parts go through
// make_rational so the invariant holds from construction on.
using BigRational = mpq_class;

/// Builds num/den in lowest terms. Throws std::domain_error when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num/den" or "num" (optional leading '-'). Throws
/// std::invalid_argument on malformed text or a zero denominator.
BigRational parse_rational(std::string_view text);

/// Parses a decimal integer. Throws std::invalid_argument on malformed text.
BigInt parse_bigint(std::string_view text);

std::string to_string(const BigInt& value);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational& value);

/// Decimal expansion rounded half away from zero to `digits` fractional
/// digits, e.g. to_decimal(1/3, 4) == "0.3333".
std::string to_decimal(const BigRational& value, unsigned digits);

BigInt factorial(unsigned n);

/// Triangle of S(d, j) for 0 <= j <= d <= bound(), grown on demand.
///
/// Rows live in a deque, so a row handed out through row() stays valid
/// while later rows are appended. Growth is serialized by an internal
/// mutex; rows are never modified after they are appended.
class StirlingTable {
public:
    explicit StirlingTable(unsigned bound = 0);

    StirlingTable(const StirlingTable&) = delete;
    StirlingTable& operator=(const StirlingTable&) = delete;

    /// Row d: S(d, 0), ..., S(d, d).
    std::span<const BigInt> row(unsigned d);

    /// S(d, j); zero when j > d.
    BigInt operator()(unsigned d, unsigned j);

    unsigned bound() const;

private:
    void grow_locked(unsigned bound);

    mutable std::mutex mutex_;
    std::deque<std::vector<BigInt>> rows_;
};

/// Process-wide table shared by the free functions below.
StirlingTable& shared_stirling_table();

/// S(d, j), the number of ways to split a d-set into j nonempty blocks.
BigInt stirling2(unsigned d, unsigned j);

/// H_n = 1 + 1/2 + ... + 1/n. Throws std::domain_error for n == 0.
BigRational harmonic(unsigned n);

/// The i-th prime, 1-based (nth_prime(1) == 2). Throws std::domain_error
/// for i == 0.
std::uint64_t nth_prime(std::size_t i);

} // namespace partpoly
