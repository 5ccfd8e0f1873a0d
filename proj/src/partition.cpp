#include "partpoly/partition.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>

namespace partpoly {

namespace {

const BigInt kZero = 0;

} // namespace

Partition::Partition(std::vector<BigInt> mults)
    : mults_(std::move(mults))
{
    while (!mults_.empty() && mults_.back() == 0)
        mults_.pop_back();
}

Partition Partition::from_parts(std::span<const std::int64_t> parts)
{
    std::vector<BigInt> mults;
    for (const auto part : parts) {
        if (part <= 0)
            throw std::invalid_argument("partition parts must be positive, got " + std::to_string(part));
        if (static_cast<std::uint64_t>(part) > kMaxPartSize)
            throw std::domain_error("part " + std::to_string(part) + " exceeds the supported maximum part size");
        const auto index = static_cast<std::size_t>(part);
        if (mults.size() < index)
            mults.resize(index);
        ++mults[index - 1];
    }
    return Partition(std::move(mults));
}

Partition Partition::from_parts(std::initializer_list<std::int64_t> parts)
{
    return from_parts(std::span<const std::int64_t>(parts.begin(), parts.size()));
}

Partition Partition::from_multiplicities(std::vector<BigInt> mults)
{
    for (const auto& m : mults)
        if (m < 0)
            throw std::invalid_argument("negative multiplicity " + to_string(m));
    if (mults.size() > kMaxPartSize)
        throw std::domain_error("multiplicity list longer than the supported maximum part size");
    return Partition(std::move(mults));
}

Partition Partition::from_multiplicities(std::initializer_list<long> mults)
{
    std::vector<BigInt> v;
    v.reserve(mults.size());
    for (const long m : mults)
        v.emplace_back(m);
    return from_multiplicities(std::move(v));
}

const BigInt& Partition::multiplicity(std::size_t part) const
{
    if (part == 0 || part > mults_.size())
        return kZero;
    return mults_[part - 1];
}

std::size_t Partition::support_size() const
{
    return static_cast<std::size_t>(std::count_if(mults_.begin(), mults_.end(), [](const BigInt& m) { return m != 0; }));
}

std::vector<std::uint64_t> Partition::parts() const
{
    const BigInt total = partpoly::length(*this);
    if (!total.fits_ulong_p() || total.get_ui() > std::numeric_limits<std::uint32_t>::max())
        throw std::length_error("partition has too many parts to list: " + to_string(total));
    std::vector<std::uint64_t> out;
    out.reserve(total.get_ui());
    for (std::size_t i = mults_.size(); i >= 1; --i)
        out.insert(out.end(), mults_[i - 1].get_ui(), i);
    return out;
}

PartitionStats stats(const Partition& lambda)
{
    return {length(lambda), size(lambda), lambda.largest_part()};
}

BigInt length(const Partition& lambda)
{
    BigInt total = 0;
    for (const auto& m : lambda.multiplicities())
        total += m;
    return total;
}

BigInt size(const Partition& lambda)
{
    return moment(lambda, 1);
}

BigInt norm(const Partition& lambda)
{
    BigInt product = 1;
    const auto& m = lambda.multiplicities();
    for (std::size_t i = 2; i <= m.size(); ++i) {
        if (m[i - 1] == 0)
            continue;
        if (!m[i - 1].fits_ulong_p())
            throw std::domain_error("norm exponent too large to evaluate");
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), i, m[i - 1].get_ui());
        product *= power;
    }
    return product;
}

BigInt supernorm(const Partition& lambda)
{
    BigInt product = 1;
    const auto& m = lambda.multiplicities();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        if (m[i - 1] == 0)
            continue;
        if (!m[i - 1].fits_ulong_p())
            throw std::domain_error("supernorm exponent too large to evaluate");
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), nth_prime(i), m[i - 1].get_ui());
        product *= power;
    }
    return product;
}

BigInt moment(const Partition& lambda, unsigned k)
{
    BigInt total = 0;
    BigInt power;
    const auto& m = lambda.multiplicities();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        if (m[i - 1] == 0)
            continue;
        mpz_ui_pow_ui(power.get_mpz_t(), i, k);
        total += power * m[i - 1];
    }
    return total;
}

Partition oplus(const Partition& lambda, const Partition& gamma)
{
    const auto& a = lambda.multiplicities();
    const auto& b = gamma.multiplicities();
    std::vector<BigInt> sum(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        sum[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        sum[i] += b[i];
    return Partition::from_multiplicities(std::move(sum));
}

bool is_nontrivial(const Partition& lambda)
{
    return lambda.largest_part() > 1;
}

// --- enumeration -----------------------------------------------------------

PartitionStream::PartitionStream(unsigned n, std::optional<unsigned> length, std::optional<unsigned> max_part)
    : n_(n)
    , length_(length)
    , max_part_(max_part ? std::min(*max_part, n) : n)
{
}

PartitionStream enumerate(unsigned n, std::optional<unsigned> length)
{
    return PartitionStream(n, length);
}

void PartitionStream::fill_from(std::size_t pos, unsigned total, unsigned cap)
{
    parts_.resize(pos);
    if (length_) {
        // lexicographically largest non-increasing fill of the remaining slots
        for (std::size_t slots = *length_ - pos; slots > 0; --slots) {
            const unsigned v = std::min<unsigned>(cap, total - static_cast<unsigned>(slots - 1));
            parts_.push_back(v);
            total -= v;
            cap = v;
        }
        return;
    }
    while (total >= cap && cap > 0) {
        parts_.push_back(cap);
        total -= cap;
    }
    if (total > 0)
        parts_.push_back(total);
}

bool PartitionStream::first()
{
    if (n_ == 0)
        return !length_ || *length_ == 0;
    if (length_) {
        const unsigned l = *length_;
        if (l == 0 || l > n_ || static_cast<unsigned long long>(l) * max_part_ < n_)
            return false;
    } else if (max_part_ == 0) {
        return false;
    }
    fill_from(0, n_, max_part_);
    return true;
}

bool PartitionStream::next()
{
    if (done_)
        return false;
    if (!started_) {
        started_ = true;
        if (!first()) {
            done_ = true;
            return false;
        }
        return true;
    }

    if (!length_) {
        std::size_t j = parts_.size();
        while (j > 0 && parts_[j - 1] == 1)
            --j;
        if (j == 0) {
            done_ = true;
            return false;
        }
        --j;
        unsigned total = 0;
        for (std::size_t t = j; t < parts_.size(); ++t)
            total += parts_[t];
        const unsigned v = parts_[j] - 1;
        parts_.resize(j);
        parts_.push_back(v);
        fill_from(j + 1, total - v, v);
        return true;
    }

    // Fixed length: decrease the rightmost part that still leaves room for
    // the freed unit in the slots after it.
    const std::size_t l = parts_.size();
    unsigned suffix = 0;
    for (std::size_t j = l; j-- > 0;) {
        if (j + 1 < l && parts_[j] > 1) {
            const unsigned v = parts_[j] - 1;
            const unsigned rest = suffix + 1;
            if (rest <= static_cast<unsigned long long>(l - 1 - j) * v) {
                parts_[j] = v;
                fill_from(j + 1, rest, v);
                return true;
            }
        }
        suffix += parts_[j];
    }
    done_ = true;
    return false;
}

Partition PartitionStream::current() const
{
    std::vector<BigInt> mults(parts_.empty() ? 0 : parts_.front());
    for (const unsigned p : parts_)
        ++mults[p - 1];
    return Partition::from_multiplicities(std::move(mults));
}

PartitionStream::iterator::iterator(PartitionStream* stream)
    : stream_(stream)
{
    ++*this;
}

PartitionStream::iterator& PartitionStream::iterator::operator++()
{
    if (stream_->next())
        value_ = stream_->current();
    else
        stream_ = nullptr;
    return *this;
}

// --- counting --------------------------------------------------------------

PartitionCountTable::PartitionCountTable(unsigned n_max, unsigned length_max)
    : n_max_(n_max)
    , length_max_(length_max)
    , cells_(static_cast<std::size_t>(n_max + 1) * (length_max + 1))
{
    const std::size_t width = length_max_ + 1;
    cells_[0] = 1;
    for (unsigned n = 1; n <= n_max_; ++n) {
        for (unsigned l = 1; l <= std::min(n, length_max_); ++l) {
            // cells with l > n are never written and stay zero
            cells_[n * width + l] = cells_[(n - 1) * width + (l - 1)] + cells_[(n - l) * width + l];
        }
    }
}

const BigInt& PartitionCountTable::at(long n, long l) const
{
    if (n < 0 || l < 0 || l > n)
        return kZero;
    if (n > static_cast<long>(n_max_) || l > static_cast<long>(length_max_))
        throw std::out_of_range("p(" + std::to_string(n) + ", " + std::to_string(l) + ") is outside the count table");
    return cells_[static_cast<std::size_t>(n) * (length_max_ + 1) + static_cast<std::size_t>(l)];
}

namespace {

class SharedCounts {
public:
    BigInt by_length(unsigned n, unsigned l)
    {
        std::shared_ptr<const PartitionCountTable> table;
        {
            std::lock_guard lock(mutex_);
            if (!table_ || table_->n_max() < n || table_->length_max() < l) {
                const unsigned n_max = table_ ? std::max(table_->n_max(), n) : n;
                const unsigned l_max = table_ ? std::max(table_->length_max(), l) : l;
                table_ = std::make_shared<const PartitionCountTable>(n_max, l_max);
            }
            table = table_;
        }
        return table->at(n, l);
    }

    BigInt total(unsigned n)
    {
        std::lock_guard lock(mutex_);
        // Euler's pentagonal number recurrence
        if (totals_.empty())
            totals_.push_back(1);
        while (totals_.size() <= n) {
            const long m = static_cast<long>(totals_.size());
            BigInt value = 0;
            for (long k = 1;; ++k) {
                const long g1 = k * (3 * k - 1) / 2;
                if (g1 > m)
                    break;
                const long g2 = k * (3 * k + 1) / 2;
                BigInt term = totals_[m - g1];
                if (g2 <= m)
                    term += totals_[m - g2];
                if (k % 2 == 1)
                    value += term;
                else
                    value -= term;
            }
            totals_.push_back(value);
        }
        return totals_[n];
    }

private:
    std::mutex mutex_;
    std::shared_ptr<const PartitionCountTable> table_;
    std::vector<BigInt> totals_;
};

SharedCounts& shared_counts()
{
    static SharedCounts counts;
    return counts;
}

} // namespace

BigInt count(unsigned n)
{
    return shared_counts().total(n);
}

BigInt count(unsigned n, unsigned length)
{
    if (length > n)
        return 0;
    return shared_counts().by_length(n, length);
}

} // namespace partpoly
