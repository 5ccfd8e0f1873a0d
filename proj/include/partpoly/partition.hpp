#pragma once

// Integer partitions in frequency notation <1^m1, 2^m2, ..., k^mk>,
// their statistics, the multiset sum, enumeration and counting.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "partpoly/exactmath.hpp"

namespace partpoly {

/// Largest part size accepted by the dense frequency representation.
inline constexpr std::size_t kMaxPartSize = std::size_t{1} << 24;

/// A partition stored as its multiplicity sequence m_1, ..., m_k.
///
/// The stored sequence never ends in a zero, so two partitions are equal
/// exactly when their multiplicity sequences are. Multiplicities are big
/// integers: repeated doubling and factorial scaling push them far past
/// 64 bits.
class Partition {
public:
    /// The empty partition (size 0, length 0).
    Partition() = default;

    /// Additive notation, in any order. Throws std::invalid_argument on a
    /// part <= 0 and std::domain_error on a part above kMaxPartSize.
    static Partition from_parts(std::span<const std::int64_t> parts);
    static Partition from_parts(std::initializer_list<std::int64_t> parts);

    /// Frequency notation; entry 0 is m_1. Trailing zeros are dropped.
    /// Throws std::invalid_argument on a negative multiplicity.
    static Partition from_multiplicities(std::vector<BigInt> mults);
    static Partition from_multiplicities(std::initializer_list<long> mults);

    bool empty() const { return mults_.empty(); }

    /// k, the largest part; 0 for the empty partition.
    std::size_t largest_part() const { return mults_.size(); }

    /// m_part; zero for parts outside 1..k.
    const BigInt& multiplicity(std::size_t part) const;

    /// m_1, ..., m_k with m_k > 0.
    const std::vector<BigInt>& multiplicities() const { return mults_; }

    /// Number of distinct part sizes.
    std::size_t support_size() const;

    /// Parts in non-increasing order. Throws std::length_error when the
    /// length does not fit in memory-sized integers.
    std::vector<std::uint64_t> parts() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<BigInt> mults);

    std::vector<BigInt> mults_;
};

struct PartitionStats {
    BigInt length;
    BigInt size;
    std::size_t largest_part = 0;

    friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

PartitionStats stats(const Partition& lambda);

BigInt length(const Partition& lambda);
BigInt size(const Partition& lambda);

/// Product of the parts; 1 for the empty partition.
BigInt norm(const Partition& lambda);

/// Product of p_i^{m_i} over the primes p_1 = 2, p_2 = 3, ...
BigInt supernorm(const Partition& lambda);

/// p_k(lambda) = sum of i^k m_i.
BigInt moment(const Partition& lambda, unsigned k);

/// Multiset union: multiplicities add componentwise.
Partition oplus(const Partition& lambda, const Partition& gamma);

/// True when some part exceeds 1.
bool is_nontrivial(const Partition& lambda);

/// Streams the partitions of n, optionally with exactly `length` parts and
/// parts bounded by `max_part`, in descending-lexicographic order of their
/// non-increasing part lists: 5, 4+1, 3+2, 3+1+1, ...
///
/// Only the current part list is held in memory.
class PartitionStream {
public:
    explicit PartitionStream(unsigned n, std::optional<unsigned> length = std::nullopt,
                             std::optional<unsigned> max_part = std::nullopt);

    /// Moves to the next partition; false once the stream is exhausted.
    /// The first call positions on the first partition.
    bool next();

    /// Current part list, non-increasing. Valid after next() returned true.
    const std::vector<unsigned>& parts() const { return parts_; }

    Partition current() const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;

        reference operator*() const { return value_; }
        pointer operator->() const { return &value_; }
        iterator& operator++();
        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        friend class PartitionStream;
        explicit iterator(PartitionStream* stream);

        PartitionStream* stream_ = nullptr;
        Partition value_;
    };

    /// Single pass: begin() may be called once per stream object.
    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    bool first();
    void fill_from(std::size_t pos, unsigned total, unsigned cap);

    unsigned n_;
    std::optional<unsigned> length_;
    unsigned max_part_;
    bool started_ = false;
    bool done_ = false;
    std::vector<unsigned> parts_;
};

/// enumerate(n) / enumerate(n, length): see PartitionStream.
PartitionStream enumerate(unsigned n, std::optional<unsigned> length = std::nullopt);

/// Immutable table of p(n, l) for n <= n_max, l <= length_max, filled with
/// p(n, l) = p(n-1, l-1) + p(n-l, l). Safe for concurrent reads.
class PartitionCountTable {
public:
    PartitionCountTable(unsigned n_max, unsigned length_max);

    unsigned n_max() const { return n_max_; }
    unsigned length_max() const { return length_max_; }

    /// p(n, l); zero when l > n or n < 0. Throws std::out_of_range past the
    /// table bounds (n > n_max or l > length_max).
    const BigInt& at(long n, long l) const;

private:
    unsigned n_max_;
    unsigned length_max_;
    std::vector<BigInt> cells_; // row-major, (n_max+1) x (length_max+1)
};

/// p(n), the number of partitions of n.
BigInt count(unsigned n);

/// p(n, l), the number of partitions of n into exactly l parts.
BigInt count(unsigned n, unsigned length);

} // namespace partpoly
