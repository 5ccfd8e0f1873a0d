#pragma once

// Partition polynomials f(x) = sum m_i x^i, formal differentiation,
// the Stirling-number derivative recursion and derived partitions.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "partpoly/exactmath.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// Dense polynomial with big-integer coefficients, lowest degree first.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }

    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const BigInt& coefficient(std::size_t power) const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// f_lambda: coefficient of x^i is m_i, constant term 0.
IntPolynomial poly_of(const Partition& lambda);

/// Power-rule derivative.
IntPolynomial diff(const IntPolynomial& p);

/// `times`-fold derivative.
IntPolynomial diff(const IntPolynomial& p, unsigned times);

/// Horner evaluation at a rational point.
BigRational eval(const IntPolynomial& p, const BigRational& x);

/// d-th derivative of f_lambda at x through the Stirling recursion
///
///   f^(d)(x) = sum_i i^d m_i x^(i-d) - sum_{j<d} S(d, j) x^(j-d) f^(j)(x),
///
/// evaluated bottom-up at the fixed point x. Returns 0 for d > k.
/// The recursion carries negative powers of x, so x == 0 throws
/// std::domain_error; evaluate diff(poly_of(lambda), d) at 0 instead.
BigRational deriv_recursive_eval(const Partition& lambda, unsigned d, const BigRational& x);

/// f^(0)(1), ..., f^(k)(1); the first two entries are length and size.
std::vector<BigInt> derivative_profile(const Partition& lambda);

/// lambda^(d): part j has multiplicity (j+1)(j+2)...(j+d) m_{j+d}, so that
/// diff(poly_of(lambda), d) == poly_of(lambda^(d)) + d! m_d.
/// Empty once d >= k.
Partition derived_partition(const Partition& lambda, unsigned d);

} // namespace partpoly
