// pok: pmf tables, certified modes, threshold scans and claim verification
// for the Poisson distribution of order k.
//
// Exit codes: 0 success, 1 computational failure, 2 usage error.

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pok/io.hpp"
#include "pok/modes.hpp"
#include "pok/pmf.hpp"
#include "pok/threshold.hpp"
#include "pok/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

double parse_lambda(const std::string& text)
{
    double value = 0.0;
    if (text.find('/') != std::string::npos)
    {
        try
        {
            value = pok::RationalLambda::parse(text).to_double();
        }
        catch (const std::invalid_argument& e)
        {
            throw UsageError(e.what());
        }
    }
    else
    {
        auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{} || end != text.data() + text.size())
            throw UsageError("lambda is not a number: '" + text + "'");
    }
    if (!(value > 0.0))
        throw UsageError("lambda must be > 0");
    return value;
}

pok::RationalLambda parse_exact_lambda(const std::string& text)
{
    try
    {
        return pok::RationalLambda::parse(text);
    }
    catch (const std::invalid_argument& e)
    {
        if (std::string(e.what()) == "lambda must be > 0")
            throw UsageError(e.what());
        throw UsageError("--exact requires lambda as a fraction p/q, got '" + text + "'");
    }
}

pok::OrderKParams make_params(int k, double lambda)
{
    try
    {
        return pok::OrderKParams(k, lambda);
    }
    catch (const std::invalid_argument& e)
    {
        throw UsageError(e.what());
    }
}

pok::OutputFormat parse_format_flag(const std::string& text)
{
    auto format = pok::parse_format(text);
    if (!format)
        throw UsageError("unknown format '" + text + "' (expected csv, json or plain)");
    return *format;
}

int enumeration_cap()
{
    const char* env = std::getenv("POK_ENUM_CAP");
    if (!env || !*env)
        return pok::default_enumeration_cap;
    int cap = 0;
    std::string_view text(env);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), cap);
    if (ec != std::errc{} || end != text.data() + text.size() || cap < 0)
        throw UsageError("POK_ENUM_CAP must be a non-negative integer");
    return cap;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Poisson distribution of order k: pmf, modes, thresholds, verification"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Reserved; all computations are deterministic");

    int k = 1;
    std::string lambda_text;
    std::string format_text = "plain";

    auto* pmf_cmd = app.add_subcommand("pmf", "Tabulate f_k(x; lambda) for x = 0..x_max");
    int x_max = 0;
    std::string engine_text = "recurrence";
    pmf_cmd->add_option("--k", k, "Order k >= 1")->required();
    pmf_cmd->add_option("--lambda", lambda_text, "Rate lambda > 0 (decimal or p/q)")->required();
    pmf_cmd->add_option("--x-max", x_max, "Largest support point")->required();
    pmf_cmd->add_option("--engine", engine_text, "enumeration, recurrence or polynomial");
    pmf_cmd->add_option("--format", format_text, "csv, json or plain");

    auto* mode_cmd = app.add_subcommand("mode", "Certified mode set");
    bool exact = false;
    double tie_tolerance = pok::default_tie_tolerance;
    mode_cmd->add_option("--k", k, "Order k >= 1")->required();
    mode_cmd->add_option("--lambda", lambda_text, "Rate lambda > 0; p/q with --exact")->required();
    mode_cmd->add_flag("--exact", exact, "Compare probabilities as exact rationals");
    mode_cmd->add_option("--tie-tolerance", tie_tolerance, "Relative tie tolerance (float path)");
    mode_cmd->add_option("--format", format_text, "csv, json or plain");

    auto* scan_cmd = app.add_subcommand("scan", "Locate mode-set transitions in lambda");
    double lambda_min = 0.01, lambda_max = 0.99, step = 0.01;
    scan_cmd->add_option("--k", k, "Order k >= 1")->required();
    scan_cmd->add_option("--min", lambda_min, "Smallest lambda")->capture_default_str();
    scan_cmd->add_option("--max", lambda_max, "Largest lambda")->capture_default_str();
    scan_cmd->add_option("--step", step, "Grid step")->capture_default_str();
    scan_cmd->add_option("--format", format_text, "csv, json or plain");

    auto* verify_cmd = app.add_subcommand("verify", "Run claim verification suites");
    std::string claim_text;
    verify_cmd->add_option("claim", claim_text, "Claim id or 'all'")->required();
    verify_cmd->add_option("--format", format_text, "csv, json or plain");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    std::ostringstream out;
    int status = exit_ok;
    try
    {
        auto format = parse_format_flag(format_text);

        if (*pmf_cmd)
        {
            auto engine = pok::parse_engine(engine_text);
            if (!engine)
                throw UsageError("unknown engine '" + engine_text + "'");
            if (x_max < 0)
                throw UsageError("x-max must be >= 0");
            auto params = make_params(k, parse_lambda(lambda_text));
            pok::write_pmf(out, pok::pmf_table(params, x_max, *engine, enumeration_cap()), format);
        }
        else if (*mode_cmd)
        {
            if (exact)
            {
                auto lambda = parse_exact_lambda(lambda_text);
                make_params(k, lambda.to_double());
                auto result = pok::find_modes_exact(k, lambda);
                pok::write_mode(out, result, pok::mode_bounds(result.params), format);
            }
            else
            {
                if (!(tie_tolerance > 0.0 && tie_tolerance < 1.0))
                    throw UsageError("tie-tolerance must lie in (0, 1); use --exact for exact ties");
                auto params = make_params(k, parse_lambda(lambda_text));
                auto result = pok::find_modes(params, tie_tolerance);
                pok::write_mode(out, result, pok::mode_bounds(params), format);
            }
        }
        else if (*scan_cmd)
        {
            if (k < 1)
                throw UsageError("k must be >= 1");
            if (!(lambda_min > 0.0 && lambda_min < lambda_max) || !(step > 0.0))
                throw UsageError("scan range must satisfy 0 < min < max and step > 0");
            pok::write_scan(out, pok::threshold_scan(k, lambda_min, lambda_max, step), format);
        }
        else if (*verify_cmd)
        {
            std::vector<pok::VerificationReport> reports;
            if (claim_text == "all")
            {
                for (auto claim : pok::all_claims())
                    reports.push_back(pok::run_suite(claim));
            }
            else
            {
                auto claim = pok::parse_claim(claim_text);
                if (!claim)
                    throw UsageError("unknown claim '" + claim_text + "'");
                reports.push_back(pok::run_suite(*claim));
            }
            pok::write_reports(out, reports, format);
            for (const auto& r : reports)
                if (!r.passed)
                    status = exit_failure;
        }
    }
    catch (const UsageError& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }

    std::cout << out.str() << std::flush;
    return status;
}
