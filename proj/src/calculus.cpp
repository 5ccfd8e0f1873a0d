#include "partpoly/calculus.hpp"

#include <stdexcept>

namespace partpoly {

namespace {

const BigInt kZero = 0;

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients))
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    coeffs_.reserve(coefficients.size());
    for (const long c : coefficients)
        coeffs_.emplace_back(c);
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const BigInt& IntPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : kZero;
}

IntPolynomial poly_of(const Partition& lambda)
{
    const auto& m = lambda.multiplicities();
    std::vector<BigInt> coeffs;
    if (!m.empty()) {
        coeffs.reserve(m.size() + 1);
        coeffs.emplace_back(0);
        coeffs.insert(coeffs.end(), m.begin(), m.end());
    }
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial diff(const IntPolynomial& p)
{
    const auto& c = p.coefficients();
    if (c.size() <= 1)
        return {};
    std::vector<BigInt> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out[i - 1] = c[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(out));
}

IntPolynomial diff(const IntPolynomial& p, unsigned times)
{
    IntPolynomial q = p;
    for (unsigned t = 0; t < times && !q.is_zero(); ++t)
        q = diff(q);
    return q;
}

BigRational eval(const IntPolynomial& p, const BigRational& x)
{
    BigRational acc = 0;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + BigRational(*it);
    return acc;
}

BigRational deriv_recursive_eval(const Partition& lambda, unsigned d, const BigRational& x)
{
    if (x == 0)
        throw std::domain_error("the derivative recursion has terms x^(j-d) with j < d and is undefined at x = 0; "
                                "evaluate the differentiated polynomial directly");
    const std::size_t k = lambda.largest_part();
    if (d > k)
        return 0;

    const auto& m = lambda.multiplicities();
    const BigRational x_inv = 1 / x;

    // x^i for i = 0..k and x^-t for t = 0..d
    std::vector<BigRational> up(k + 1), down(d + 1);
    up[0] = 1;
    for (std::size_t i = 1; i <= k; ++i)
        up[i] = up[i - 1] * x;
    down[0] = 1;
    for (unsigned t = 1; t <= d; ++t)
        down[t] = down[t - 1] * x_inv;

    auto& stirling = shared_stirling_table();
    std::vector<BigRational> f(d + 1);
    BigInt ipow;
    for (unsigned t = 0; t <= d; ++t) {
        BigRational moment_term = 0;
        for (std::size_t i = 1; i <= k; ++i) {
            if (m[i - 1] == 0)
                continue;
            mpz_ui_pow_ui(ipow.get_mpz_t(), i, t);
            moment_term += BigRational(ipow * m[i - 1]) * up[i];
        }
        f[t] = moment_term * down[t];

        const auto s = stirling.row(t);
        for (unsigned j = 0; j < t; ++j) {
            if (s[j] == 0)
                continue;
            f[t] -= BigRational(s[j]) * down[t - j] * f[j];
        }
    }
    return f[d];
}

std::vector<BigInt> derivative_profile(const Partition& lambda)
{
    const std::size_t k = lambda.largest_part();
    auto& stirling = shared_stirling_table();
    // At x = 1 the recursion reads f^(t)(1) = p_t - sum_{j<t} S(t, j) f^(j)(1).
    std::vector<BigInt> f(k + 1);
    for (unsigned t = 0; t <= k; ++t) {
        f[t] = moment(lambda, t);
        const auto s = stirling.row(t);
        for (unsigned j = 0; j < t; ++j)
            f[t] -= s[j] * f[j];
    }
    return f;
}

Partition derived_partition(const Partition& lambda, unsigned d)
{
    const std::size_t k = lambda.largest_part();
    if (d >= k)
        return {};
    const auto& m = lambda.multiplicities();
    std::vector<BigInt> out(k - d);
    for (std::size_t j = 1; j <= k - d; ++j) {
        const BigInt& source = m[j + d - 1];
        if (source == 0)
            continue;
        BigInt factor = source;
        for (std::size_t t = j + 1; t <= j + d; ++t)
            factor *= static_cast<unsigned long>(t);
        out[j - 1] = std::move(factor);
    }
    return Partition::from_multiplicities(std::move(out));
}

} // namespace partpoly
