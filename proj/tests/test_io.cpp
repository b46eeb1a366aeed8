#include <charconv>
#include <sstream>

#include <gtest/gtest.h>

#include "pok/io.hpp"

using namespace pok;
using nlohmann::json;

namespace {

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

double parse_double(const std::string& s)
{
    double v = 0.0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    EXPECT_EQ(ec, std::errc{});
    EXPECT_EQ(end, s.data() + s.size());
    return v;
}

} // namespace

TEST(Format, parse)
{
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
    EXPECT_EQ(parse_format("json"), OutputFormat::json);
    EXPECT_EQ(parse_format("plain"), OutputFormat::plain);
    EXPECT_FALSE(parse_format("xml"));
}

TEST(Format, shortest_repr_round_trips)
{
    EXPECT_EQ(shortest_repr(0.5), "0.5");
    EXPECT_EQ(shortest_repr(0.1), "0.1");
    for (double v : {std::exp(-1.0), 1.0 / 3.0, 2.2250738585072014e-308, 0.2299246507321515})
        EXPECT_EQ(parse_double(shortest_repr(v)), v);
}

// JSON written and re-read reproduces every double bit for bit.
TEST(PmfJson, round_trip)
{
    for (auto engine : {Engine::recurrence, Engine::polynomial, Engine::enumeration})
        for (int k : {1, 2, 5})
            for (double lambda : {0.1, 0.7320508075688772, 3.0})
            {
                auto table = pmf_table(OrderKParams(k, lambda), 40, engine);
                std::ostringstream os;
                write_pmf(os, table, OutputFormat::json);
                auto back = pmf_table_from_json(json::parse(os.str()));
                EXPECT_EQ(back.params, table.params);
                EXPECT_EQ(back.engine, table.engine);
                EXPECT_EQ(back.values, table.values);
            }
}

TEST(PmfJson, schema)
{
    auto doc = to_json(pmf_table_recurrence(OrderKParams(2, 0.5), 2));
    EXPECT_EQ(doc["engine"], "recurrence");
    EXPECT_EQ(doc["params"]["k"], 2);
    ASSERT_EQ(doc["rows"].size(), 3u);
    EXPECT_EQ(doc["rows"][2]["x"], 2);
    EXPECT_TRUE(doc["rows"][2].contains("cumulative"));
    EXPECT_THROW(pmf_table_from_json(json::parse(R"({"params":{"k":2,"lambda":0.5},"engine":"x","rows":[]})")),
                 std::invalid_argument);
}

TEST(PmfCsv, header_and_full_precision)
{
    auto table = pmf_table_recurrence(OrderKParams(3, 1.7), 20);
    std::ostringstream os;
    write_pmf(os, table, OutputFormat::csv);
    auto rows = lines(os.str());
    ASSERT_EQ(rows.size(), 22u);
    EXPECT_EQ(rows[0], "x,pmf,cumulative");
    for (int x = 0; x <= 20; ++x)
    {
        const auto& row = rows[x + 1];
        auto c1 = row.find(',');
        auto c2 = row.find(',', c1 + 1);
        EXPECT_EQ(row.substr(0, c1), std::to_string(x));
        EXPECT_EQ(parse_double(row.substr(c1 + 1, c2 - c1 - 1)), table.values[x]);
    }
}

TEST(PmfPlain, readable)
{
    std::ostringstream os;
    write_pmf(os, pmf_table_recurrence(OrderKParams(1, 3.0), 5), OutputFormat::plain);
    auto rows = lines(os.str());
    ASSERT_EQ(rows.size(), 8u);
    EXPECT_NE(rows[0].find("k = 1"), std::string::npos);
    EXPECT_EQ(rows[2].size(), rows[7].size());
}

TEST(ModeJson, schema)
{
    auto r = find_modes_exact(1, RationalLambda(3, 1));
    auto doc = to_json(r, mode_bounds(r.params));
    EXPECT_EQ(doc["modes"], json::array({2, 3}));
    EXPECT_EQ(doc["path"], "exact");
    EXPECT_EQ(doc["params"]["lambda_exact"], "3/1");
    EXPECT_EQ(doc["bounds"]["lower"], 2);
    EXPECT_EQ(doc["bounds"]["upper"], 3);
    EXPECT_EQ(doc["certified"], true);

    std::ostringstream os;
    write_mode(os, r, mode_bounds(r.params), OutputFormat::csv);
    auto rows = lines(os.str());
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[1].substr(0, 16), "1,3/1,exact,2;3,");
}

TEST(ScanJson, schema)
{
    auto doc = to_json(threshold_scan(2, 0.01, 0.99, 0.01));
    ASSERT_EQ(doc["transitions"].size(), 1u);
    EXPECT_EQ(doc["transitions"][0]["below"], json::array({0}));
    EXPECT_EQ(doc["transitions"][0]["above"], json::array({2}));
    EXPECT_FALSE(doc["transitions"][0].contains("at_point"));
    EXPECT_EQ(doc["params"]["k"], 2);
    EXPECT_EQ(doc["certified"], true);

    auto tie = to_json(threshold_scan(1, 0.5, 1.5, 1.0));
    EXPECT_EQ(tie["transitions"][0]["at_point"], json::array({0, 1}));
}

TEST(ReportJson, schema)
{
    std::vector<VerificationReport> reports{run_suite(ClaimId::prop21)};
    std::ostringstream os;
    write_reports(os, reports, OutputFormat::json);
    auto doc = json::parse(os.str());
    EXPECT_EQ(doc["passed"], true);
    ASSERT_EQ(doc["reports"].size(), 1u);
    const auto& r = doc["reports"][0];
    EXPECT_EQ(r["claim_id"], "prop21");
    EXPECT_EQ(r["passed"], true);
    EXPECT_TRUE(r["failures"].empty());
    EXPECT_EQ(r["grid"]["cases"], 400);
    EXPECT_TRUE(r.contains("worst_margin"));
}
