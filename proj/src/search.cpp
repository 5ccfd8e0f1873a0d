#include "partpoly/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "partpoly/calculus.hpp"

namespace partpoly {

std::vector<BigInt> profile_prefix(const Partition& lambda, unsigned order)
{
    std::vector<BigInt> profile = derivative_profile(lambda);
    profile.resize(static_cast<std::size_t>(order) + 1);
    return profile;
}

std::optional<unsigned> distinguishing_order(const Partition& lambda, const Partition& other)
{
    const auto bound = static_cast<unsigned>(std::max(lambda.largest_part(), other.largest_part()));
    const auto a = profile_prefix(lambda, bound);
    const auto b = profile_prefix(other, bound);
    for (unsigned d = 0; d <= bound; ++d)
        if (a[d] != b[d])
            return d;
    return std::nullopt;
}

namespace {

using GroupMap = std::map<std::vector<BigInt>, std::vector<Partition>>;

} // namespace

CollisionReport collision_search(unsigned n, unsigned length, unsigned order, unsigned jobs)
{
    if (length < 1 || length > n)
        throw std::domain_error("collision search needs 1 <= length <= n, got n = " + std::to_string(n) +
                                ", length = " + std::to_string(length));
    if (order < 1)
        throw std::domain_error("collision search needs order >= 1");

    // Shard by largest part, from n - length + 1 down to ceil(n / length),
    // so that concatenating shards reproduces the enumeration order.
    const unsigned top = n - length + 1;
    const unsigned bottom = (n + length - 1) / length;
    std::vector<unsigned> firsts;
    for (unsigned first = top; first >= bottom && first >= 1; --first)
        firsts.push_back(first);

    std::vector<GroupMap> shards(firsts.size());
    detail::parallel_for(firsts.size(), jobs, [&](std::size_t s) {
        const unsigned first = firsts[s];
        auto& groups = shards[s];
        if (length == 1) {
            auto lambda = Partition::from_parts({static_cast<std::int64_t>(first)});
            groups[profile_prefix(lambda, order)].push_back(std::move(lambda));
            return;
        }
        PartitionStream rest(n - first, length - 1, first);
        std::vector<std::int64_t> parts;
        while (rest.next()) {
            parts.assign(1, first);
            parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
            auto lambda = Partition::from_parts(parts);
            groups[profile_prefix(lambda, order)].push_back(std::move(lambda));
        }
    });

    GroupMap merged;
    for (auto& shard : shards) {
        for (auto& [key, members] : shard) {
            auto& target = merged[key];
            target.insert(target.end(), std::make_move_iterator(members.begin()), std::make_move_iterator(members.end()));
        }
    }

    CollisionReport report{n, length, order, {}};
    for (auto& [key, members] : merged)
        if (members.size() >= 2)
            report.groups.push_back(std::move(members));
    return report;
}

std::optional<unsigned> smallest_collision_size(unsigned length, unsigned order, unsigned n_cap, unsigned jobs)
{
    for (unsigned n = std::max(length, 1u); n <= n_cap; ++n)
        if (!collision_search(n, length, order, jobs).groups.empty())
            return n;
    return std::nullopt;
}

} // namespace partpoly
