#include "partpoly/averages.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "parallel.hpp"
#include "partpoly/integrals.hpp"

namespace partpoly {

namespace {

void require_cell(unsigned n, unsigned l)
{
    if (l < 1 || l > n)
        throw std::domain_error("Avg(n, l) needs 1 <= l <= n, got n = " + std::to_string(n) + ", l = " + std::to_string(l));
}

} // namespace

CountTable::CountTable(unsigned n_max)
    : CountTable(n_max, n_max)
{
}

CountTable::CountTable(unsigned n_max, unsigned length_max)
    : counts_(n_max, length_max)
{
}

MultiplicityProfile CountTable::compute(unsigned n, unsigned l) const
{
    MultiplicityProfile profile{n, l, std::vector<BigInt>(n)};
    // A partition of n into l parts with exactly j' >= j copies of part i is
    // counted once for each j <= j' after removing j copies of i.
    for (unsigned i = 1; i <= n; ++i) {
        auto& c = profile.counts[i - 1];
        for (unsigned j = 1; j <= l && static_cast<unsigned long>(j) * i <= n; ++j)
            c += p(static_cast<long>(n) - static_cast<long>(j * i), static_cast<long>(l - j));
    }
    return profile;
}

MultiplicityProfile CountTable::profile(unsigned n, unsigned l) const
{
    if (n > n_max() || l > length_max())
        throw std::out_of_range("profile (" + std::to_string(n) + ", " + std::to_string(l) + ") is outside the count table");
    const auto key = std::make_pair(n, l);
    {
        std::lock_guard lock(mutex_);
        if (auto it = profiles_.find(key); it != profiles_.end())
            return it->second;
    }
    MultiplicityProfile fresh = compute(n, l);
    std::lock_guard lock(mutex_);
    return profiles_.emplace(key, std::move(fresh)).first->second;
}

MultiplicityProfile multiplicity_profile(unsigned n, unsigned length)
{
    return CountTable(n, length).profile(n, length);
}

BigRational avg(const CountTable& table, unsigned n, unsigned length)
{
    require_cell(n, length);
    return integral(table.profile(n, length).combined());
}

BigRational avg(unsigned n, unsigned length)
{
    require_cell(n, length);
    return avg(CountTable(n, length), n, length);
}

BigRational avg_by_enumeration(unsigned n, unsigned length)
{
    require_cell(n, length);
    BigRational sum = 0;
    unsigned long items = 0;
    for (const auto& lambda : enumerate(n, length)) {
        sum += integral(lambda);
        ++items;
    }
    sum /= BigRational(items);
    return sum;
}

namespace {

void finish_report(AvgReport& report)
{
    report.monotone = true;
    report.first_violation.reset();
    for (std::size_t l = 1; l < report.values.size(); ++l) {
        if (report.values[l - 1] > report.values[l]) {
            report.monotone = false;
            report.first_violation = static_cast<unsigned>(l);
            break;
        }
    }
}

} // namespace

AvgReport avg_table(const CountTable& table, unsigned n)
{
    if (n < 1)
        throw std::domain_error("avg_table needs n >= 1");
    AvgReport report;
    report.n = n;
    for (unsigned l = 1; l <= n; ++l) {
        report.values.push_back(avg(table, n, l));
        report.partition_counts.push_back(table.p(n, l));
    }
    finish_report(report);
    return report;
}

AvgReport avg_table(unsigned n)
{
    if (n < 1)
        throw std::domain_error("avg_table needs n >= 1");
    return avg_table(CountTable(n), n);
}

ConjectureScan check_conjecture(unsigned n_max, unsigned jobs)
{
    if (n_max < 1)
        throw std::domain_error("check_conjecture needs n_max >= 1");

    const CountTable table(n_max);
    ConjectureScan scan;
    scan.reports.resize(n_max);
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned n = 1; n <= n_max; ++n) {
        scan.reports[n - 1].n = n;
        scan.reports[n - 1].values.resize(n);
        scan.reports[n - 1].partition_counts.resize(n);
        for (unsigned l = 1; l <= n; ++l)
            cells.emplace_back(n, l);
    }

    // Each cell writes its own slot; no two cells share one.
    detail::parallel_for(cells.size(), jobs, [&](std::size_t c) {
        const auto [n, l] = cells[c];
        auto& report = scan.reports[n - 1];
        report.values[l - 1] = integral(table.profile(n, l).combined());
        report.partition_counts[l - 1] = table.p(n, l);
    });

    for (auto& report : scan.reports) {
        finish_report(report);
        scan.all_monotone = scan.all_monotone && report.monotone;
    }
    return scan;
}

BigRational avg2_closed_form(unsigned n)
{
    if (n < 2)
        throw std::domain_error("the two-part closed form needs n >= 2");
    BigRational inner = harmonic(n) - 1;
    if (n % 2 == 0)
        inner += make_rational(2, n + 2);
    inner /= BigRational(2 * (n / 2));
    return inner;
}

double avg3_lower_bound(unsigned n)
{
    if (n < 4)
        throw std::domain_error("the three-part bound needs n >= 4");
    const double nd = static_cast<double>(n);
    const double log_term = std::log(nd - 1.0);
    const double slope = (nd / 2.0) / (nd - 2.0);
    const double integral_of_g = (nd / 2.0 - 1.0) * log_term - ((nd - 2.0) - log_term) * slope;
    const double combined_length = 3.0 * count(n, 3).get_d();
    return integral_of_g / combined_length;
}

} // namespace partpoly
