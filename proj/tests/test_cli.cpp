#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "partpoly/cli.hpp"
#include "partpoly/json_io.hpp"

using namespace partpoly;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args)
{
    args.insert(args.end(), {"--format", "json"});
    const auto result = invoke(args);
    REQUIRE(result.code == 0);
    return json::parse(result.out);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ','))
            row.push_back(cell);
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("derivative table")
{
    const auto result = invoke({"derivatives", "--parts", "5,2,2,1"});
    CHECK(result.code == 0);
    const auto doc = invoke_json({"derivatives", "--parts", "5,2,2,1"});
    std::vector<std::string> values;
    for (const auto& row : doc["derivatives"])
        values.push_back(row["value"].get<std::string>());
    CHECK(values == std::vector<std::string>{"4", "10", "24", "60", "120", "120"});
    for (const auto& v : values)
        CHECK(result.out.find(v) != std::string::npos);

    const auto at = invoke_json({"derivatives", "--parts", "5,2,2,1", "--at", "1/2", "--order", "2"});
    REQUIRE(at["derivatives"].size() == 1);
    CHECK(at["derivatives"][0]["value"] == "13/2");
    const auto zero = invoke_json({"derivatives", "--mults", "1,2,0,0,1", "--at", "0", "--order", "1"});
    CHECK(zero["derivatives"][0]["value"] == "1");
}

TEST_CASE("integral as json")
{
    const auto doc = invoke_json({"integral", "--parts", "5,2,2,1"});
    CHECK(doc["integral"] == "1/3");
    CHECK(partition_from_json(doc["partition"]) == Partition::from_parts({5, 2, 2, 1}));
}

TEST_CASE("conjecture on the smallest table")
{
    const auto result = invoke({"conjecture", "--max-n", "1", "--format", "json"});
    REQUIRE(result.code == 0);
    const auto doc = json::parse(result.out);
    CHECK(doc["all_monotone"] == true);
    CHECK_FALSE(result.err.empty());

    const auto table = invoke({"conjecture", "--max-n", "12", "--jobs", "3"});
    CHECK(table.code == 0);
}

TEST_CASE("other subcommands")
{
    const auto stats = invoke_json({"stats", "--mults", "1,2,0,0,1"});
    CHECK(stats["size"] == "10");
    CHECK(stats["length"] == "4");
    CHECK(stats["supernorm"] == "198");
    CHECK(partition_from_json(stats["partition"]) == Partition::from_parts({5, 2, 2, 1}));

    const auto poly = invoke_json({"poly", "--parts", "5,2,2,1"});
    CHECK(polynomial_from_json(poly) == IntPolynomial{0, 1, 2, 0, 0, 1});

    const auto seq = invoke_json({"derived-seq", "--parts", "4,3,3,3,1"});
    std::vector<std::string> sizes;
    for (const auto& step : seq["sequence"])
        sizes.push_back(step["size"].get<std::string>());
    CHECK(sizes == std::vector<std::string>{"14", "30", "42", "24", "0"});

    CHECK(invoke_json({"count", "--n", "10"})["count"] == "42");
    CHECK(invoke_json({"count", "--n", "5", "--length", "2"})["count"] == "2");
    CHECK(invoke_json({"avg", "--n", "5", "--length", "2"})["avg_exact"] == "77/240");

    const auto collide = invoke_json({"collide", "--n", "12", "--length", "3", "--order", "2", "--jobs", "2"});
    CHECK(collide["groups"].size() == 2);

    const auto density = invoke_json({"density", "--target", "3/8", "--epsilon", "1/100", "--full-partition"});
    CHECK(density["exact_hit"] == true);
    CHECK(partition_from_json(density["result_partition"]) == Partition::from_multiplicities({3, 0, 3}));
}

TEST_CASE("csv and json carry the same values")
{
    const auto csv = invoke({"avg-table", "--n", "12", "--format", "csv"});
    REQUIRE(csv.code == 0);
    const auto rows = csv_rows(csv.out);
    REQUIRE(rows.size() == 13);
    CHECK(rows[0] == std::vector<std::string>{"n", "l", "avg_exact", "avg_decimal", "p_n_l"});

    const auto doc = invoke_json({"avg-table", "--n", "12"});
    REQUIRE(doc["values"].size() == 12);
    for (std::size_t l = 1; l <= 12; ++l) {
        const auto& row = rows[l];
        const auto& cell = doc["values"][l - 1];
        CHECK(row[0] == "12");
        CHECK(row[1] == std::to_string(l));
        CHECK(row[2] == cell["avg_exact"].get<std::string>());
        CHECK(row[3] == cell["avg_decimal"].get<std::string>());
        CHECK(row[4] == cell["p_n_length"].get<std::string>());
    }

    const auto digits = invoke_json({"avg", "--n", "5", "--length", "2", "--decimal-digits", "3"});
    CHECK(digits["avg_decimal"] == "0.321");
}

TEST_CASE("exit codes")
{
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"integral", "--parts", "5,2", "--bogus"}).code == 2);
    CHECK(invoke({"integral", "--parts", "5,2", "--mults", "1,1"}).code == 2);
    CHECK(invoke({"integral", "--parts", "5,2", "--format", "xml"}).code == 2);
    CHECK(invoke({"avg", "--n", "5"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);

    const auto bad = invoke({"integral", "--parts", "5,0,1"});
    CHECK(bad.code == 1);
    CHECK_FALSE(bad.err.empty());
    CHECK(bad.out.empty());
    CHECK(invoke({"integral", "--parts", "a,b"}).code == 1);
    CHECK(invoke({"integral", "--mults", "1,-2"}).code == 1);
    CHECK(invoke({"avg", "--n", "3", "--length", "5"}).code == 1);
    CHECK(invoke({"density", "--target", "1/2", "--epsilon", "1/100"}).code == 1);
    CHECK(invoke({"density", "--target", "1/3", "--epsilon", "0"}).code == 1);
    // flag ranges are checked while parsing
    CHECK(invoke({"collide", "--n", "5", "--length", "2", "--order", "0"}).code == 2);
}
