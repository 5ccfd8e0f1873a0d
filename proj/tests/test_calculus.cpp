#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "partpoly/calculus.hpp"

using namespace partpoly;

namespace {

const Partition lambda1 = Partition::from_parts({5, 2, 2, 1});
const Partition lambda2 = Partition::from_parts({4, 3, 2, 1});
const Partition lambda3 = Partition::from_parts({4, 3, 3, 3, 1});

std::vector<BigInt> ints(std::initializer_list<long> values)
{
    std::vector<BigInt> out;
    for (const long v : values)
        out.emplace_back(v);
    return out;
}

// i! / (i - d)!
BigInt falling(std::size_t i, unsigned d)
{
    BigInt f = 1;
    for (unsigned t = 0; t < d; ++t)
        f *= static_cast<unsigned long>(i - t);
    return f;
}

} // namespace

TEST_CASE("poly_of")
{
    CHECK(poly_of(lambda1) == IntPolynomial{0, 1, 2, 0, 0, 1});
    CHECK(poly_of(lambda2) == IntPolynomial{0, 1, 1, 1, 1});
    CHECK(poly_of(Partition()).is_zero());
    CHECK(poly_of(lambda1).degree() == 5);
}

TEST_CASE("diff")
{
    CHECK(diff(IntPolynomial{0, 1, 2, 0, 0, 1}) == IntPolynomial{1, 4, 0, 0, 5});
    CHECK(diff(IntPolynomial{2, 6, 12}) == IntPolynomial{6, 24});
    CHECK(diff(IntPolynomial{7}).is_zero());
    CHECK(diff(IntPolynomial{}).is_zero());
    CHECK(diff(poly_of(lambda1), 2) == IntPolynomial{4, 0, 0, 20});
    CHECK(diff(poly_of(lambda1), 9).is_zero());
}

TEST_CASE("eval")
{
    CHECK(eval(poly_of(lambda1), 1) == 4);
    CHECK(eval(IntPolynomial{-3, 5, 7}, 0) == -3);
    CHECK(eval(poly_of(lambda2), BigRational(1, 2)) == BigRational(15, 16));
    CHECK(eval(IntPolynomial{}, 5) == 0);
}

TEST_CASE("recursive derivative examples")
{
    CHECK(deriv_recursive_eval(lambda1, 2, 1) == 24);
    CHECK(deriv_recursive_eval(lambda2, 3, 1) == 30);
    for (const auto& lambda : {lambda1, lambda2, lambda3}) {
        const auto k = static_cast<unsigned>(lambda.largest_part());
        CHECK(deriv_recursive_eval(lambda, k + 1, BigRational(2, 3)) == 0);
        CHECK(deriv_recursive_eval(lambda, k + 7, BigRational(-5, 2)) == 0);
    }
    const BigRational half(1, 2);
    CHECK(deriv_recursive_eval(lambda3, 2, half) == eval(diff(diff(poly_of(lambda3))), half));
    // f'' = 18x + 12x^2
    CHECK(deriv_recursive_eval(lambda3, 2, half) == BigRational(12));
}

TEST_CASE("recursive derivative rejects x = 0")
{
    CHECK_THROWS_AS(deriv_recursive_eval(lambda1, 2, 0), std::domain_error);
    CHECK_THROWS_AS(deriv_recursive_eval(Partition(), 0, 0), std::domain_error);
}

TEST_CASE("recursion agrees with repeated differentiation for n <= 12")
{
    const std::vector<BigRational> points{BigRational(1), BigRational(1, 2), BigRational(2), BigRational(-1, 3)};
    std::size_t checked = 0;
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        const IntPolynomial f = poly_of(lambda);
        for (unsigned d = 0; d <= lambda.largest_part(); ++d) {
            const IntPolynomial fd = diff(f, d);
            for (const auto& x : points) {
                REQUIRE(deriv_recursive_eval(lambda, d, x) == eval(fd, x));
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("derivative profiles")
{
    CHECK(derivative_profile(lambda1) == ints({4, 10, 24, 60, 120, 120}));
    CHECK(derivative_profile(lambda2) == ints({4, 10, 20, 30, 24}));
    for (long m = 1; m <= 10; ++m) {
        const auto ones = Partition::from_multiplicities({m});
        CHECK(derivative_profile(ones) == ints({m, m}));
    }
    CHECK(derivative_profile(Partition()) == ints({0}));
}

TEST_CASE("profile identities for n <= 12")
{
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        const auto profile = derivative_profile(lambda);
        REQUIRE(profile.size() == lambda.largest_part() + 1);
        if (lambda.empty())
            continue;
        CHECK(profile[0] == length(lambda));
        CHECK(profile[1] == size(lambda));
        if (lambda.largest_part() >= 2)
            CHECK(profile[2] == moment(lambda, 2) - size(lambda));
        const IntPolynomial f = poly_of(lambda);
        for (unsigned d = 0; d < profile.size(); ++d) {
            CHECK(profile[d] >= 0);
            CHECK(BigRational(profile[d]) == eval(diff(f, d), 1));
        }
    }
}

TEST_CASE("derived partitions of <1^1,3^3,4^1>")
{
    CHECK(derived_partition(lambda3, 0) == lambda3);
    CHECK(derived_partition(lambda3, 1) == Partition::from_multiplicities({0, 9, 4}));
    CHECK(derived_partition(lambda3, 2) == Partition::from_multiplicities({18, 12}));
    CHECK(derived_partition(lambda3, 3) == Partition::from_multiplicities({24}));
    CHECK(derived_partition(lambda3, 4).empty());
    CHECK(derived_partition(lambda3, 10).empty());

    CHECK(size(derived_partition(lambda3, 0)) == 14);
    CHECK(size(derived_partition(lambda3, 1)) == 30);
    CHECK(size(derived_partition(lambda3, 2)) == 42);
    CHECK(size(derived_partition(lambda3, 3)) == 24);
}

TEST_CASE("derived partitions follow differentiation for n <= 12")
{
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        const std::size_t k = lambda.largest_part();
        const auto& m = lambda.multiplicities();
        for (unsigned d = 0; d <= k; ++d) {
            const Partition derived = derived_partition(lambda, d);
            // the d-fold derivative keeps a constant d! m_d that no part carries
            std::vector<BigInt> coeffs = poly_of(derived).coefficients();
            if (coeffs.empty())
                coeffs.resize(1);
            coeffs[0] = factorial(d) * lambda.multiplicity(d);
            CHECK(IntPolynomial(coeffs) == diff(poly_of(lambda), d));

            BigInt expected_length = 0, expected_size = 0;
            for (std::size_t i = d + 1; i <= k; ++i) {
                expected_length += falling(i, d) * m[i - 1];
                expected_size += falling(i, d + 1) * m[i - 1];
            }
            CHECK(length(derived) == expected_length);
            CHECK(size(derived) == expected_size);

            if (d >= 1) {
                // |lambda^(d-1)| = l(lambda^(d)) + d! m_d
                CHECK(size(derived_partition(lambda, d - 1)) ==
                      length(derived) + factorial(d) * lambda.multiplicity(d));
            }
        }
        if (k > 0)
            CHECK(length(derived_partition(lambda, static_cast<unsigned>(k))) == 0);
    }
}
