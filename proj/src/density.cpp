#include "partpoly/density.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "partpoly/integrals.hpp"

namespace partpoly {

namespace {

void require_index(unsigned s)
{
    if (s < 2)
        throw std::domain_error("edge sequences start at s = 2, got s = " + std::to_string(s));
}

// (1/s)(1/2 + (s-1)/(s+1))
BigRational alpha_integral(unsigned s)
{
    BigRational v = BigRational(1, 2) + make_rational(s - 1, s + 1);
    v /= BigRational(s);
    return v;
}

// (1/s)((s-1)/2 + 1/(s+1))
BigRational beta_integral(unsigned s)
{
    BigRational v = make_rational(s - 1, 2) + make_rational(1, s + 1);
    v /= BigRational(s);
    return v;
}

double log2_of(const BigInt& value)
{
    if (value <= 0)
        return 0.0;
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return static_cast<double>(exponent) + std::log2(mantissa);
}

BigRational halve_times(const BigRational& value, unsigned times)
{
    BigRational out;
    mpq_div_2exp(out.get_mpq_t(), value.get_mpq_t(), times);
    return out;
}

} // namespace

Partition alpha(unsigned s)
{
    require_index(s);
    std::vector<BigInt> m(s);
    m[0] += 1;
    m[s - 1] += s - 1;
    return Partition::from_multiplicities(std::move(m));
}

Partition beta(unsigned s)
{
    require_index(s);
    std::vector<BigInt> m(s);
    m[0] += s - 1;
    m[s - 1] += 1;
    return Partition::from_multiplicities(std::move(m));
}

PartitionSummary summarize(const Partition& lambda)
{
    PartitionSummary summary;
    summary.largest_part = lambda.largest_part();
    summary.length = length(lambda);
    summary.length_log2 = log2_of(summary.length);
    summary.support_size = lambda.support_size();
    return summary;
}

DensityTrace approximate(const BigRational& c, const BigRational& epsilon)
{
    if (c <= 0 || c >= BigRational(1, 2))
        throw std::domain_error("target must lie strictly between 0 and 1/2, got " + to_string(c));
    if (epsilon <= 0)
        throw std::domain_error("epsilon must be positive, got " + to_string(epsilon));

    DensityTrace trace;
    trace.target = c;
    trace.epsilon = epsilon;

    // The brackets (alpha_integral(s), beta_integral(s)) exhaust (0, 1/2),
    // so the search ends; a c sitting on an endpoint moves on to a larger s.
    unsigned s = 2;
    while (!(alpha_integral(s) < c && c < beta_integral(s)))
        ++s;
    trace.start_index = s;
    trace.start_lower = alpha_integral(s);
    trace.start_upper = beta_integral(s);
    const BigRational width = trace.start_upper - trace.start_lower;

    Partition lower = alpha(s);
    Partition upper = beta(s);

    for (unsigned r = 1;; ++r) {
        Partition delta = oplus(lower, upper);
        DensityStep step;
        step.index = r;
        step.delta = summarize(delta);
        step.integral = integral(delta);
        step.error_bound = halve_times(width, r);
        step.lower = integral(lower);
        step.upper = integral(upper);
        step.bracket_length = length(lower);
        trace.steps.push_back(step);

        if (step.integral == c) {
            trace.exact_hit = true;
            trace.result = std::move(delta);
            break;
        }
        if (step.error_bound < epsilon) {
            trace.result = std::move(delta);
            break;
        }

        if (c < step.integral) {
            upper = std::move(delta);
            lower = oplus(lower, lower);
        } else {
            lower = std::move(delta);
            upper = oplus(upper, upper);
        }
    }

    trace.achieved_error = abs(integral(trace.result) - c);
    return trace;
}

} // namespace partpoly
