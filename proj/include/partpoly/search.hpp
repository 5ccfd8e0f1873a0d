#pragma once

// Derivative-profile collisions among partitions of equal size and length.

#include <optional>
#include <vector>

#include "partpoly/exactmath.hpp"
#include "partpoly/partition.hpp"

namespace partpoly {

/// derivative_profile(lambda) cut or zero-padded to orders 0..order.
std::vector<BigInt> profile_prefix(const Partition& lambda, unsigned order);

/// Smallest d with f_lambda^(d)(1) != f_other^(d)(1), scanning
/// 0 <= d <= max(lg(lambda), lg(other)) with profiles padded by zeros past
/// each largest part. Empty when the profiles agree through that bound,
/// which for unequal partitions means the profiles do not separate them.
std::optional<unsigned> distinguishing_order(const Partition& lambda, const Partition& other);

struct CollisionReport {
    unsigned n = 0;
    unsigned length = 0;
    unsigned order = 0;
    /// Partitions sharing the profile prefix through `order`; each group has
    /// at least two members in enumeration order, groups sorted by prefix.
    std::vector<std::vector<Partition>> groups;
};

/// Groups the partitions of n into `length` parts by exact profile prefix
/// through `order`. The enumeration is sharded by largest part across
/// `jobs` threads; the output does not depend on `jobs`.
/// Throws std::domain_error unless 1 <= length <= n and order >= 1.
CollisionReport collision_search(unsigned n, unsigned length, unsigned order, unsigned jobs = 1);

/// Smallest n in [length, n_cap] whose collision_search is nonempty.
std::optional<unsigned> smallest_collision_size(unsigned length, unsigned order, unsigned n_cap, unsigned jobs = 1);

} // namespace partpoly
