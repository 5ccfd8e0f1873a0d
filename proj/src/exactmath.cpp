#include "partpoly/exactmath.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace partpoly {

namespace {

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

} // namespace

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt parse_bigint(std::string_view text)
{
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+'))
        digits.remove_prefix(1);
    if (!all_digits(digits))
        throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    BigInt value(std::string(digits), 10);
    if (text.front() == '-')
        value = -value;
    return value;
}

BigRational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return BigRational(parse_bigint(text));
    const BigInt num = parse_bigint(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text))
        throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    const BigInt den(std::string(den_text), 10);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

std::string to_string(const BigRational& value)
{
    if (value.get_den() == 1)
        return value.get_num().get_str(10);
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string to_decimal(const BigRational& value, unsigned digits)
{
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);

    const BigInt magnitude = abs(value.get_num()) * scale;
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), magnitude.get_mpz_t(), value.get_den().get_mpz_t());
    if (2 * r >= value.get_den())
        ++q;

    std::string body = q.get_str(10);
    if (digits > 0) {
        if (body.size() <= digits)
            body.insert(0, digits + 1 - body.size(), '0');
        body.insert(body.size() - digits, 1, '.');
    }
    if (value < 0 && q != 0)
        body.insert(0, 1, '-');
    return body;
}

BigInt factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

StirlingTable::StirlingTable(unsigned bound)
{
    std::lock_guard lock(mutex_);
    grow_locked(bound);
}

void StirlingTable::grow_locked(unsigned bound)
{
    if (rows_.empty())
        rows_.push_back({BigInt(1)});
    while (rows_.size() <= bound) {
        const auto& prev = rows_.back();
        const unsigned d = static_cast<unsigned>(rows_.size());
        std::vector<BigInt> next(d + 1);
        // S(d, j) = j S(d-1, j) + S(d-1, j-1)
        for (unsigned j = 1; j <= d; ++j) {
            if (j < d)
                next[j] = j * prev[j];
            next[j] += prev[j - 1];
        }
        rows_.push_back(std::move(next));
    }
}

std::span<const BigInt> StirlingTable::row(unsigned d)
{
    std::lock_guard lock(mutex_);
    grow_locked(d);
    return rows_[d];
}

BigInt StirlingTable::operator()(unsigned d, unsigned j)
{
    if (j > d)
        return 0;
    return row(d)[j];
}

unsigned StirlingTable::bound() const
{
    std::lock_guard lock(mutex_);
    return rows_.empty() ? 0 : static_cast<unsigned>(rows_.size() - 1);
}

StirlingTable& shared_stirling_table()
{
    static StirlingTable table(32);
    return table;
}

BigInt stirling2(unsigned d, unsigned j)
{
    return shared_stirling_table()(d, j);
}

BigRational harmonic(unsigned n)
{
    if (n == 0)
        throw std::domain_error("harmonic number H_0 is not defined here; need n >= 1");
    BigRational sum = 0;
    for (unsigned i = 1; i <= n; ++i)
        sum += BigRational(1, i);
    return sum;
}

std::uint64_t nth_prime(std::size_t i)
{
    if (i == 0)
        throw std::domain_error("primes are indexed from 1");

    static std::mutex mutex;
    static std::vector<std::uint64_t> primes;
    static std::uint64_t sieved_to = 1;

    std::lock_guard lock(mutex);
    while (primes.size() < i) {
        // p_i < i (ln i + ln ln i) for i >= 6
        const double fi = static_cast<double>(std::max<std::size_t>(i, 6));
        std::uint64_t limit = static_cast<std::uint64_t>(fi * (std::log(fi) + std::log(std::log(fi)))) + 1;
        limit = std::max(limit, 2 * sieved_to);

        std::vector<bool> composite(limit + 1, false);
        primes.clear();
        for (std::uint64_t p = 2; p <= limit; ++p) {
            if (composite[p])
                continue;
            primes.push_back(p);
            for (std::uint64_t q = p * p; q <= limit; q += p)
                composite[q] = true;
        }
        sieved_to = limit;
    }
    return primes[i - 1];
}

} // namespace partpoly
