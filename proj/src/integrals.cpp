#include "partpoly/integrals.hpp"

#include <stdexcept>

#include "partpoly/calculus.hpp"

namespace partpoly {

NormalizedPoly::NormalizedPoly(Partition base)
    : base_(std::move(base))
    , length_(partpoly::length(base_))
{
    if (base_.empty())
        throw std::domain_error("the empty partition has length 0 and no normalized polynomial");
}

BigRational NormalizedPoly::operator()(const BigRational& x) const
{
    if (x < 0 || x > 1)
        throw std::domain_error("normalized partition polynomials are defined on [0, 1], got x = " + to_string(x));
    BigRational value = eval(poly_of(base_), x);
    value /= BigRational(length_);
    return value;
}

BigRational NormalizedPoly::integral() const
{
    BigRational sum = 0;
    const auto& m = base_.multiplicities();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        if (m[i - 1] != 0)
            sum += make_rational(m[i - 1], BigInt(static_cast<unsigned long>(i + 1)));
    }
    sum /= BigRational(length_);
    return sum;
}

BigRational normalized_eval(const Partition& lambda, const BigRational& x)
{
    return NormalizedPoly(lambda)(x);
}

BigRational integral(const Partition& lambda)
{
    return NormalizedPoly(lambda).integral();
}

} // namespace partpoly
