#include "partpoly/json_io.hpp"

#include <stdexcept>
#include <string>

namespace partpoly {

using nlohmann::json;

namespace {

BigInt integer_from_json(const json& value)
{
    if (value.is_string())
        return parse_bigint(value.get<std::string>());
    if (value.is_number_integer())
        return BigInt(std::to_string(value.get<long long>()), 10);
    throw std::invalid_argument("expected an integer or a decimal string, got " + value.dump());
}

json string_array(const std::vector<BigInt>& values)
{
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_string(v));
    return out;
}

json summary_json(const PartitionSummary& s)
{
    return {{"largest_part", s.largest_part},
            {"length", to_string(s.length)},
            {"length_log2", s.length_log2},
            {"support_size", s.support_size}};
}

} // namespace

json to_json(const Partition& lambda)
{
    return {{"multiplicities", string_array(lambda.multiplicities())}};
}

Partition partition_from_json(const json& doc)
{
    if (!doc.is_object())
        throw std::invalid_argument("partition JSON must be an object");
    if (auto it = doc.find("multiplicities"); it != doc.end()) {
        if (!it->is_array())
            throw std::invalid_argument("\"multiplicities\" must be an array");
        std::vector<BigInt> mults;
        for (const auto& v : *it)
            mults.push_back(integer_from_json(v));
        return Partition::from_multiplicities(std::move(mults));
    }
    if (auto it = doc.find("parts"); it != doc.end()) {
        if (!it->is_array())
            throw std::invalid_argument("\"parts\" must be an array");
        std::vector<std::int64_t> parts;
        for (const auto& v : *it) {
            const BigInt part = integer_from_json(v);
            if (!part.fits_slong_p())
                throw std::invalid_argument("part " + to_string(part) + " is out of range");
            parts.push_back(part.get_si());
        }
        return Partition::from_parts(parts);
    }
    throw std::invalid_argument("partition JSON needs \"multiplicities\" or \"parts\"");
}

json to_json(const IntPolynomial& p)
{
    return {{"coefficients", string_array(p.coefficients())}};
}

IntPolynomial polynomial_from_json(const json& doc)
{
    if (!doc.is_object() || !doc.contains("coefficients") || !doc["coefficients"].is_array())
        throw std::invalid_argument("polynomial JSON needs a \"coefficients\" array");
    std::vector<BigInt> coeffs;
    for (const auto& v : doc["coefficients"])
        coeffs.push_back(integer_from_json(v));
    return IntPolynomial(std::move(coeffs));
}

json rational_json(const BigRational& value, unsigned decimal_digits)
{
    return {{"exact", to_string(value)}, {"decimal", to_decimal(value, decimal_digits)}};
}

json to_json(const AvgReport& report, unsigned decimal_digits)
{
    json values = json::array();
    for (std::size_t l = 0; l < report.values.size(); ++l) {
        values.push_back({{"length", l + 1},
                          {"avg_exact", to_string(report.values[l])},
                          {"avg_decimal", to_decimal(report.values[l], decimal_digits)},
                          {"p_n_length", to_string(report.partition_counts[l])}});
    }
    json out = {{"n", report.n}, {"values", values}, {"monotone", report.monotone}};
    out["first_violation"] = report.first_violation ? json(*report.first_violation) : json(nullptr);
    return out;
}

json to_json(const DensityTrace& trace, bool full_partition, unsigned decimal_digits)
{
    json steps = json::array();
    for (const auto& step : trace.steps) {
        steps.push_back({{"index", step.index},
                         {"integral", to_string(step.integral)},
                         {"error_bound", to_string(step.error_bound)},
                         {"lower", to_string(step.lower)},
                         {"upper", to_string(step.upper)},
                         {"partition", summary_json(step.delta)}});
    }
    json out = {{"target", to_string(trace.target)},
                {"epsilon", to_string(trace.epsilon)},
                {"start_index", trace.start_index},
                {"start_interval", {to_string(trace.start_lower), to_string(trace.start_upper)}},
                {"steps", steps},
                {"exact_hit", trace.exact_hit},
                {"achieved_error", rational_json(trace.achieved_error, decimal_digits)},
                {"result", summary_json(summarize(trace.result))}};
    if (full_partition)
        out["result_partition"] = to_json(trace.result);
    return out;
}

json to_json(const CollisionReport& report)
{
    json groups = json::array();
    for (const auto& group : report.groups) {
        json members = json::array();
        for (const auto& lambda : group)
            members.push_back(to_json(lambda));
        groups.push_back(members);
    }
    return {{"n", report.n}, {"length", report.length}, {"order", report.order}, {"groups", groups}};
}

} // namespace partpoly
