#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "oracles.hpp"
#include "partpoly/partition.hpp"

using namespace partpoly;

namespace {

std::vector<std::vector<unsigned>> drain(PartitionStream stream)
{
    std::vector<std::vector<unsigned>> out;
    while (stream.next())
        out.push_back(stream.parts());
    return out;
}

std::vector<std::vector<unsigned>> as_unsigned(const std::vector<std::vector<std::int64_t>>& lists)
{
    std::vector<std::vector<unsigned>> out;
    for (const auto& l : lists)
        out.emplace_back(l.begin(), l.end());
    return out;
}

} // namespace

TEST_CASE("from_parts builds frequency notation")
{
    const auto lambda = Partition::from_parts({5, 2, 2, 1});
    CHECK(lambda == Partition::from_multiplicities({1, 2, 0, 0, 1}));
    CHECK(lambda.largest_part() == 5);
    CHECK(lambda.multiplicity(2) == 2);
    CHECK(lambda.multiplicity(3) == 0);
    CHECK(lambda.multiplicity(9) == 0);

    CHECK(Partition::from_parts({}).empty());
    CHECK(Partition::from_parts({4, 3, 3, 3, 1}) == Partition::from_multiplicities({1, 0, 3, 1}));
}

TEST_CASE("trailing zero multiplicities are not part of the value")
{
    const auto a = Partition::from_multiplicities({1, 0, 3, 1, 0, 0});
    CHECK(a == Partition::from_parts({4, 3, 3, 3, 1}));
    CHECK(a.multiplicities().size() == 4);
    CHECK(Partition::from_multiplicities({0, 0}).empty());
    CHECK(Partition::from_multiplicities({0, 0}) == Partition());
}

TEST_CASE("invalid input is rejected")
{
    CHECK_THROWS_AS(Partition::from_parts({3, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({-2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_multiplicities({1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_parts({static_cast<std::int64_t>(kMaxPartSize) + 1}), std::domain_error);
}

TEST_CASE("stats")
{
    CHECK(stats(Partition::from_parts({5, 2, 2, 1})) == PartitionStats{4, 10, 5});
    CHECK(stats(Partition()) == PartitionStats{0, 0, 0});
    CHECK(stats(Partition::from_parts({4, 3, 3, 3, 1})) == PartitionStats{5, 14, 4});
}

TEST_CASE("norm and supernorm")
{
    CHECK(norm(Partition::from_parts({5, 2, 2, 1})) == 20);
    CHECK(norm(Partition()) == 1);
    for (std::int64_t n = 1; n <= 30; ++n)
        CHECK(norm(Partition::from_parts({n})) == n);

    CHECK(supernorm(Partition::from_parts({1, 1})) == 4);
    CHECK(supernorm(Partition::from_parts({5, 2, 2, 1})) == 198);
    CHECK(supernorm(Partition()) == 1);
}

TEST_CASE("supernorm separates all partitions of n <= 12")
{
    std::set<std::string> seen;
    std::size_t total = 0;
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        seen.insert(to_string(supernorm(lambda)));
        ++total;
    }
    CHECK(seen.size() == total);
}

TEST_CASE("moments")
{
    CHECK(moment(Partition::from_parts({5, 2, 2, 1}), 2) == 34);
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        CHECK(moment(lambda, 0) == length(lambda));
        CHECK(moment(lambda, 1) == size(lambda));
    }
}

TEST_CASE("oplus examples")
{
    CHECK(oplus(Partition::from_parts({1}), Partition::from_parts({2})) == Partition::from_parts({2, 1}));
    const auto lambda = Partition::from_parts({5, 2, 2, 1});
    CHECK(oplus(lambda, Partition()) == lambda);
    CHECK(oplus(Partition(), lambda) == lambda);
    CHECK(oplus(lambda, lambda) == Partition::from_multiplicities({2, 4, 0, 0, 2}));
}

TEST_CASE("oplus is a commutative monoid with additive length and size")
{
    const auto pool = oracle::partitions_up_to(10);
    std::mt19937 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        const auto& a = pool[pick(rng)];
        const auto& b = pool[pick(rng)];
        const auto& c = pool[pick(rng)];
        CHECK(oplus(a, b) == oplus(b, a));
        CHECK(oplus(oplus(a, b), c) == oplus(a, oplus(b, c)));
        const auto ab = oplus(a, b);
        CHECK(length(ab) == length(a) + length(b));
        CHECK(size(ab) == size(a) + size(b));
        CHECK(ab.largest_part() == std::max(a.largest_part(), b.largest_part()));
    }
}

TEST_CASE("part list round trip")
{
    for (const auto& lambda : oracle::partitions_up_to(12)) {
        const auto parts = lambda.parts();
        CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
        std::vector<std::int64_t> signed_parts(parts.begin(), parts.end());
        CHECK(Partition::from_parts(signed_parts) == lambda);
    }
}

TEST_CASE("enumerate examples")
{
    CHECK(drain(enumerate(5, 2)) == std::vector<std::vector<unsigned>>{{4, 1}, {3, 2}});
    for (unsigned n = 1; n <= 12; ++n) {
        std::vector<Partition> all;
        for (const auto& p : enumerate(n, 1))
            all.push_back(p);
        REQUIRE(all.size() == 1);
        CHECK(all[0] == Partition::from_parts({static_cast<std::int64_t>(n)}));
    }
    std::vector<Partition> zero;
    for (const auto& p : enumerate(0))
        zero.push_back(p);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());

    CHECK(drain(enumerate(0, 1)).empty());
    CHECK(drain(enumerate(3, 5)).empty());
    CHECK(drain(enumerate(5)) ==
          std::vector<std::vector<unsigned>>{{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
}

TEST_CASE("enumeration order and content agree with the recursive oracle")
{
    for (unsigned n = 0; n <= 15; ++n) {
        CHECK(drain(enumerate(n)) == as_unsigned(oracle::part_lists(n)));
        for (unsigned l = 1; l <= n; ++l)
            CHECK(drain(enumerate(n, l)) == as_unsigned(oracle::part_lists(n, l)));
    }
}

TEST_CASE("max_part bound filters the stream")
{
    for (unsigned n = 1; n <= 14; ++n) {
        for (unsigned cap = 1; cap <= n; ++cap) {
            std::vector<std::vector<unsigned>> expected;
            for (const auto& l : as_unsigned(oracle::part_lists(n)))
                if (l.front() <= cap)
                    expected.push_back(l);
            CHECK(drain(PartitionStream(n, std::nullopt, cap)) == expected);

            for (unsigned len = 1; len <= n; ++len) {
                std::vector<std::vector<unsigned>> fixed;
                for (const auto& l : expected)
                    if (l.size() == len)
                        fixed.push_back(l);
                CHECK(drain(PartitionStream(n, len, cap)) == fixed);
            }
        }
    }
}

TEST_CASE("count examples and OEIS A000041")
{
    CHECK(count(10) == 42);
    CHECK(count(5, 2) == 2);
    for (unsigned n = 1; n <= 60; ++n)
        CHECK(count(n, 1) == 1);

    const unsigned long a000041[] = {1,     1,     2,     3,     5,     7,     11,    15,    22,    30,
                                     42,    56,    77,    101,   135,   176,   231,   297,   385,   490,
                                     627,   792,   1002,  1255,  1575,  1958,  2436,  3010,  3718,  4565,
                                     5604,  6842,  8349,  10143, 12310, 14883, 17977, 21637, 26015, 31185,
                                     37338, 44583, 53174, 63261, 75175, 89134, 105558, 124754, 147273, 173525};
    for (unsigned n = 0; n < 50; ++n)
        CHECK(count(n) == a000041[n]);
    CHECK(count(100) == BigInt("190569292", 10));
}

TEST_CASE("count by length sums to p(n) and matches enumeration")
{
    for (unsigned n = 0; n <= 30; ++n) {
        BigInt total = n == 0 ? 1 : 0;
        for (unsigned l = 1; l <= n; ++l)
            total += count(n, l);
        CHECK(total == count(n));
    }
    for (unsigned n = 1; n <= 20; ++n)
        for (unsigned l = 1; l <= n + 2; ++l)
            CHECK(count(n, l) == drain(enumerate(n, l)).size());
    CHECK(count(0, 0) == 1);
    CHECK(count(4, 0) == 0);
}

TEST_CASE("count table bounds")
{
    const PartitionCountTable table(10, 3);
    CHECK(table.at(10, 3) == 8);
    CHECK(table.at(2, 3) == 0);
    CHECK(table.at(-1, 0) == 0);
    CHECK_THROWS_AS(table.at(11, 1), std::out_of_range);
    CHECK_THROWS_AS(table.at(10, 4), std::out_of_range);
}

TEST_CASE("shared count table under concurrent growth")
{
    std::vector<std::thread> workers;
    std::vector<BigInt> results(4);
    for (unsigned w = 0; w < 4; ++w)
        workers.emplace_back([&results, w] { results[w] = count(60 + 10 * w, 3 + w); });
    for (auto& t : workers)
        t.join();
    for (unsigned w = 0; w < 4; ++w)
        CHECK(results[w] == PartitionCountTable(60 + 10 * w, 3 + w).at(60 + 10 * w, 3 + w));
}
