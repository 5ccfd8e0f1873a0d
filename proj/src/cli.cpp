#include "partpoly/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "partpoly/averages.hpp"
#include "partpoly/calculus.hpp"
#include "partpoly/density.hpp"
#include "partpoly/integrals.hpp"
#include "partpoly/json_io.hpp"
#include "partpoly/partition.hpp"
#include "partpoly/search.hpp"

namespace partpoly::cli {

namespace {

using nlohmann::json;

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (const char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

void print_csv(std::ostream& out, const Table& t)
{
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << csv_field(cells[i]);
        out << '\n';
    };
    line(t.headers);
    for (const auto& row : t.rows)
        line(row);
}

void print_table(std::ostream& out, const Table& t)
{
    std::vector<std::size_t> width(t.headers.size());
    for (std::size_t c = 0; c < t.headers.size(); ++c)
        width[c] = t.headers[c].size();
    for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
            width[c] = std::max(width[c], row[c].size());

    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c)
                s += "  ";
            s += fmt::format("{:<{}}", cells[c], width[c]);
        }
        while (!s.empty() && s.back() == ' ')
            s.pop_back();
        out << s << '\n';
    };
    line(t.headers);
    std::vector<std::string> rule;
    for (const auto w : width)
        rule.emplace_back(w, '-');
    line(rule);
    for (const auto& row : t.rows)
        line(row);
}

void emit(std::ostream& out, OutputFormat format, const Table& t, const json& doc)
{
    switch (format) {
    case OutputFormat::table:
        print_table(out, t);
        break;
    case OutputFormat::csv:
        print_csv(out, t);
        break;
    case OutputFormat::json:
        out << doc.dump(2) << '\n';
        break;
    }
}

std::string frequency_notation(const Partition& lambda)
{
    std::string s = "<";
    bool first = true;
    const auto& m = lambda.multiplicities();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        if (m[i - 1] == 0)
            continue;
        s += fmt::format("{}{}^{}", first ? "" : ",", i, to_string(m[i - 1]));
        first = false;
    }
    return s + ">";
}

std::string polynomial_text(const IntPolynomial& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    const auto& c = p.coefficients();
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        const bool negative = c[i] < 0;
        const BigInt magnitude = abs(c[i]);
        if (!s.empty())
            s += negative ? " - " : " + ";
        else if (negative)
            s += "-";
        const bool unit = magnitude == 1 && i > 0;
        if (!unit)
            s += to_string(magnitude);
        if (i >= 1)
            s += "x";
        if (i >= 2)
            s += "^" + std::to_string(i);
    }
    return s;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

struct PartitionInput {
    std::string parts;
    std::string mults;

    void attach(CLI::App* cmd)
    {
        auto* p = cmd->add_option("--parts", parts, "Parts in additive notation, e.g. 5,2,2,1");
        auto* m = cmd->add_option("--mults", mults, "Multiplicities m_1,m_2,..., e.g. 1,2,0,0,1");
        p->excludes(m);
        m->excludes(p);
    }

    Partition get() const
    {
        if (!parts.empty()) {
            std::vector<std::int64_t> values;
            for (const auto& item : split_commas(parts)) {
                const BigInt v = parse_bigint(item);
                if (!v.fits_slong_p())
                    throw std::invalid_argument("part out of range: " + item);
                values.push_back(v.get_si());
            }
            return Partition::from_parts(values);
        }
        if (!mults.empty()) {
            std::vector<BigInt> values;
            for (const auto& item : split_commas(mults))
                values.push_back(parse_bigint(item));
            return Partition::from_multiplicities(std::move(values));
        }
        throw std::invalid_argument("give the partition with --parts or --mults");
    }
};

struct Options {
    OutputFormat format = OutputFormat::table;
    unsigned digits = 12;
};

unsigned default_jobs()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// --- subcommands -----------------------------------------------------------

void cmd_stats(const Partition& lambda, const Options& o, std::ostream& out)
{
    const auto st = stats(lambda);
    const BigInt n = norm(lambda);
    const BigInt sn = supernorm(lambda);
    const BigInt m2 = moment(lambda, 2);
    Table t{{"statistic", "value"},
            {{"partition", frequency_notation(lambda)},
             {"length", to_string(st.length)},
             {"size", to_string(st.size)},
             {"largest_part", std::to_string(st.largest_part)},
             {"norm", to_string(n)},
             {"supernorm", to_string(sn)},
             {"moment_2", to_string(m2)},
             {"nontrivial", is_nontrivial(lambda) ? "true" : "false"}}};
    json doc = {{"partition", to_json(lambda)},
                {"length", to_string(st.length)},
                {"size", to_string(st.size)},
                {"largest_part", st.largest_part},
                {"norm", to_string(n)},
                {"supernorm", to_string(sn)},
                {"moment_2", to_string(m2)},
                {"nontrivial", is_nontrivial(lambda)}};
    emit(out, o.format, t, doc);
}

void cmd_poly(const Partition& lambda, const Options& o, std::ostream& out)
{
    const IntPolynomial p = poly_of(lambda);
    Table t{{"power", "coefficient"}, {}};
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        t.rows.push_back({std::to_string(i), to_string(p.coefficients()[i])});
    json doc = to_json(p);
    doc["text"] = polynomial_text(p);
    if (o.format == OutputFormat::table)
        out << "f(x) = " << polynomial_text(p) << '\n';
    emit(out, o.format, t, doc);
}

void cmd_derivatives(const Partition& lambda, const std::string& at, std::optional<unsigned> order, const Options& o,
                     std::ostream& out)
{
    const BigRational x = parse_rational(at);
    std::vector<unsigned> orders;
    if (order) {
        orders.push_back(*order);
    } else {
        for (unsigned d = 0; d <= lambda.largest_part(); ++d)
            orders.push_back(d);
    }
    const IntPolynomial p = poly_of(lambda);

    Table t{{"order", "value"}, {}};
    json values = json::array();
    for (const unsigned d : orders) {
        // the recursion is undefined at 0; the polynomial path answers there
        const BigRational v = x == 0 ? eval(diff(p, d), x) : deriv_recursive_eval(lambda, d, x);
        t.rows.push_back({std::to_string(d), to_string(v)});
        values.push_back({{"order", d}, {"value", to_string(v)}});
    }
    emit(out, o.format, t, {{"partition", to_json(lambda)}, {"x", to_string(x)}, {"derivatives", values}});
}

void cmd_derived_seq(const Partition& lambda, const Options& o, std::ostream& out)
{
    Table t{{"order", "partition", "length", "size"}, {}};
    json seq = json::array();
    for (unsigned d = 0; d <= lambda.largest_part(); ++d) {
        const Partition derived = derived_partition(lambda, d);
        const auto st = stats(derived);
        t.rows.push_back({std::to_string(d), frequency_notation(derived), to_string(st.length), to_string(st.size)});
        seq.push_back({{"order", d},
                       {"partition", to_json(derived)},
                       {"length", to_string(st.length)},
                       {"size", to_string(st.size)}});
    }
    emit(out, o.format, t, {{"partition", to_json(lambda)}, {"sequence", seq}});
}

void cmd_integral(const Partition& lambda, const Options& o, std::ostream& out)
{
    const BigRational v = integral(lambda);
    Table t{{"partition", "integral", "decimal"}, {{frequency_notation(lambda), to_string(v), to_decimal(v, o.digits)}}};
    emit(out, o.format, t,
         {{"partition", to_json(lambda)}, {"integral", to_string(v)}, {"decimal", to_decimal(v, o.digits)}});
}

void cmd_avg(unsigned n, unsigned l, const Options& o, std::ostream& out)
{
    const CountTable table(n, l);
    const BigRational v = avg(table, n, l);
    const std::string count_text = to_string(table.p(n, l));
    Table t{{"n", "l", "avg_exact", "avg_decimal", "p_n_l"},
            {{std::to_string(n), std::to_string(l), to_string(v), to_decimal(v, o.digits), count_text}}};
    emit(out, o.format, t,
         {{"n", n},
          {"length", l},
          {"avg_exact", to_string(v)},
          {"avg_decimal", to_decimal(v, o.digits)},
          {"p_n_length", count_text}});
}

void append_avg_rows(Table& t, const AvgReport& r, unsigned digits)
{
    for (std::size_t l = 1; l <= r.values.size(); ++l) {
        t.rows.push_back({std::to_string(r.n), std::to_string(l), to_string(r.values[l - 1]),
                          to_decimal(r.values[l - 1], digits), to_string(r.partition_counts[l - 1])});
    }
}

void cmd_avg_table(unsigned n, const Options& o, std::ostream& out)
{
    const AvgReport report = avg_table(n);
    Table t{{"n", "l", "avg_exact", "avg_decimal", "p_n_l"}, {}};
    append_avg_rows(t, report, o.digits);
    emit(out, o.format, t, to_json(report, o.digits));
    if (o.format == OutputFormat::table)
        out << "monotone: " << (report.monotone ? "true" : "false") << '\n';
}

void cmd_conjecture(unsigned max_n, unsigned jobs, const Options& o, std::ostream& out, std::ostream& err)
{
    const auto start = std::chrono::steady_clock::now();
    err << fmt::format("conjecture: scanning n = 1..{} on {} job(s)\n", max_n, jobs);
    const ConjectureScan scan = check_conjecture(max_n, jobs);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << fmt::format("conjecture: {} tables done in {:.2f} s\n", scan.reports.size(), seconds);

    json reports = json::array();
    for (const auto& r : scan.reports)
        reports.push_back(to_json(r, o.digits));
    const json doc = {{"max_n", max_n}, {"all_monotone", scan.all_monotone}, {"reports", reports}};

    if (o.format == OutputFormat::table) {
        Table t{{"n", "monotone", "first_violation"}, {}};
        for (const auto& r : scan.reports)
            t.rows.push_back({std::to_string(r.n), r.monotone ? "true" : "false",
                              r.first_violation ? std::to_string(*r.first_violation) : "-"});
        print_table(out, t);
        out << "monotone for all n <= " << max_n << ": " << (scan.all_monotone ? "true" : "false") << '\n';
        return;
    }
    Table t{{"n", "l", "avg_exact", "avg_decimal", "p_n_l"}, {}};
    for (const auto& r : scan.reports)
        append_avg_rows(t, r, o.digits);
    emit(out, o.format, t, doc);
}

void cmd_density(const std::string& target, const std::string& epsilon, bool full, const Options& o, std::ostream& out)
{
    const DensityTrace trace = approximate(parse_rational(target), parse_rational(epsilon));
    Table t{{"step", "integral", "decimal", "error_bound", "largest_part", "length_log2", "support_size"}, {}};
    for (const auto& s : trace.steps) {
        t.rows.push_back({std::to_string(s.index), to_string(s.integral), to_decimal(s.integral, o.digits),
                          to_string(s.error_bound), std::to_string(s.delta.largest_part),
                          fmt::format("{:.3f}", s.delta.length_log2), std::to_string(s.delta.support_size)});
    }
    emit(out, o.format, t, to_json(trace, full, o.digits));
    if (o.format == OutputFormat::table) {
        out << fmt::format("start s = {}, interval ({}, {})\n", trace.start_index, to_string(trace.start_lower),
                           to_string(trace.start_upper));
        out << "achieved error: " << to_string(trace.achieved_error) << " ~ "
            << to_decimal(trace.achieved_error, o.digits) << (trace.exact_hit ? " (exact hit)" : "") << '\n';
        if (full)
            out << "result: " << frequency_notation(trace.result) << '\n';
    }
}

void cmd_collide(unsigned n, unsigned l, unsigned order, unsigned jobs, const Options& o, std::ostream& out,
                 std::ostream& err)
{
    err << fmt::format("collide: n = {}, length = {}, order = {} on {} job(s)\n", n, l, order, jobs);
    const CollisionReport report = collision_search(n, l, order, jobs);
    err << fmt::format("collide: {} group(s)\n", report.groups.size());

    Table t{{"group", "partition", "profile"}, {}};
    for (std::size_t g = 0; g < report.groups.size(); ++g) {
        for (const auto& lambda : report.groups[g]) {
            std::string profile;
            for (const auto& v : profile_prefix(lambda, order))
                profile += (profile.empty() ? "" : " ") + to_string(v);
            t.rows.push_back({std::to_string(g + 1), frequency_notation(lambda), profile});
        }
    }
    emit(out, o.format, t, to_json(report));
}

void cmd_count(unsigned n, std::optional<unsigned> l, const Options& o, std::ostream& out)
{
    const BigInt value = l ? count(n, *l) : count(n);
    Table t{{"n", "l", "count"}, {{std::to_string(n), l ? std::to_string(*l) : "-", to_string(value)}}};
    json doc = {{"n", n}, {"count", to_string(value)}};
    doc["length"] = l ? json(*l) : json(nullptr);
    emit(out, o.format, t, doc);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact computations with partition polynomials", "partpoly"};
    app.require_subcommand(1);

    Options opt;
    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::table}, {"csv", OutputFormat::csv}, {"json", OutputFormat::json}};
    app.add_option("--format", opt.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
        ->option_text("table|csv|json");
    app.add_option("--decimal-digits", opt.digits, "Digits after the point in decimal approximations")
        ->check(CLI::Range(0u, 1000u));

    PartitionInput input;
    std::string at = "1";
    std::optional<unsigned> order;
    unsigned n = 0, length = 0, max_n = 0, depth = 0;
    std::optional<unsigned> count_length;
    unsigned jobs = default_jobs();
    std::string target, epsilon;
    bool full_partition = false;

    auto* stats_cmd = app.add_subcommand("stats", "Length, size, largest part, norm and supernorm");
    auto* poly_cmd = app.add_subcommand("poly", "Coefficients of the partition polynomial");
    auto* deriv_cmd = app.add_subcommand("derivatives", "Derivatives of the partition polynomial at a point");
    auto* seq_cmd = app.add_subcommand("derived-seq", "Derived partitions lambda^(d) for d = 0..k");
    auto* integral_cmd = app.add_subcommand("integral", "Integral of the normalized polynomial over [0, 1]");
    for (auto* cmd : {stats_cmd, poly_cmd, deriv_cmd, seq_cmd, integral_cmd})
        input.attach(cmd);
    deriv_cmd->add_option("--at", at, "Evaluation point, num/den (default 1)");
    deriv_cmd->add_option("--order", order, "Only this derivative order");

    auto* avg_cmd = app.add_subcommand("avg", "Average integral over partitions of n into l parts");
    avg_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    avg_cmd->add_option("--length", length)->required()->check(CLI::PositiveNumber);

    auto* table_cmd = app.add_subcommand("avg-table", "Avg(n, l) for l = 1..n");
    table_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* conj_cmd = app.add_subcommand("conjecture", "Check Avg(n, 1) <= ... <= Avg(n, n) for n = 1..max-n");
    conj_cmd->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    conj_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* density_cmd = app.add_subcommand("density", "Approximate a target integral in (0, 1/2)");
    density_cmd->add_option("--target", target, "Target c as num/den")->required();
    density_cmd->add_option("--epsilon", epsilon, "Tolerance as num/den")->required();
    density_cmd->add_flag("--full-partition", full_partition, "Also print the resulting partition");

    auto* collide_cmd = app.add_subcommand("collide", "Group partitions by derivative profile at x = 1");
    collide_cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    collide_cmd->add_option("--length", length)->required()->check(CLI::PositiveNumber);
    collide_cmd->add_option("--order", depth)->required()->check(CLI::PositiveNumber);
    collide_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

    auto* count_cmd = app.add_subcommand("count", "Number of partitions of n, optionally into l parts");
    count_cmd->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_option("--length", count_length)->check(CLI::NonNegativeNumber);

    for (auto* cmd : app.get_subcommands({}))
        cmd->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (stats_cmd->parsed())
            cmd_stats(input.get(), opt, out);
        else if (poly_cmd->parsed())
            cmd_poly(input.get(), opt, out);
        else if (deriv_cmd->parsed())
            cmd_derivatives(input.get(), at, order, opt, out);
        else if (seq_cmd->parsed())
            cmd_derived_seq(input.get(), opt, out);
        else if (integral_cmd->parsed())
            cmd_integral(input.get(), opt, out);
        else if (avg_cmd->parsed())
            cmd_avg(n, length, opt, out);
        else if (table_cmd->parsed())
            cmd_avg_table(n, opt, out);
        else if (conj_cmd->parsed())
            cmd_conjecture(max_n, jobs, opt, out, err);
        else if (density_cmd->parsed())
            cmd_density(target, epsilon, full_partition, opt, out);
        else if (collide_cmd->parsed())
            cmd_collide(n, length, depth, jobs, opt, out, err);
        else if (count_cmd->parsed())
            cmd_count(n, count_length, opt, out);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace partpoly::cli
