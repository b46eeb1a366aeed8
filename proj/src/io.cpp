#include "pok/io.hpp"

#include <cstdio>
#include <iomanip>
#include <ostream>

namespace pok {

using nlohmann::json;

std::optional<OutputFormat> parse_format(std::string_view name) noexcept
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "json")
        return OutputFormat::json;
    if (name == "plain")
        return OutputFormat::plain;
    return std::nullopt;
}

namespace {

json params_json(const OrderKParams& params)
{
    return {{"k", params.k()}, {"lambda", params.lambda()}};
}

// Fixed-width scientific text for the plain format.
std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

void emit_json(std::ostream& os, const json& doc)
{
    os << doc.dump(2) << '\n';
}

} // namespace

json to_json(const PmfTable& table)
{
    json rows = json::array();
    double cumulative = 0.0;
    for (std::size_t x = 0; x < table.values.size(); ++x)
    {
        cumulative += table.values[x];
        rows.push_back({{"x", x}, {"pmf", table.values[x]}, {"cumulative", cumulative}});
    }
    return {{"params", params_json(table.params)},
            {"engine", std::string(to_string(table.engine))},
            {"rows", std::move(rows)}};
}

PmfTable pmf_table_from_json(const json& doc)
{
    OrderKParams params(doc.at("params").at("k").get<int>(),
                        doc.at("params").at("lambda").get<double>());
    auto engine = parse_engine(doc.at("engine").get<std::string>());
    if (!engine)
        throw std::invalid_argument("unknown engine in pmf document");
    PmfTable table{params, {}, *engine};
    for (const auto& row : doc.at("rows"))
    {
        if (row.at("x").get<std::size_t>() != table.values.size())
            throw std::invalid_argument("pmf rows are not consecutive from x = 0");
        table.values.push_back(row.at("pmf").get<double>());
    }
    return table;
}

json to_json(const ModeResult& result, const ModeBounds& bounds)
{
    json p = params_json(result.params);
    if (result.exact_lambda)
        p["lambda_exact"] = result.exact_lambda->to_string();
    return {{"params", std::move(p)},
            {"path", result.exact_lambda ? "exact" : "float"},
            {"modes", result.modes},
            {"max_prob", result.max_prob},
            {"bounds", {{"lower", bounds.lower}, {"upper", bounds.upper}}},
            {"search_bound", result.search_bound},
            {"tie_tolerance", result.tie_tolerance},
            {"certified", result.certified}};
}

json to_json(const ThresholdReport& report)
{
    json transitions = json::array();
    for (const auto& t : report.transitions)
    {
        json item{{"lambda_star", t.lambda_star},
                  {"lambda_lo", t.lambda_lo},
                  {"lambda_hi", t.lambda_hi},
                  {"below", t.below},
                  {"above", t.above}};
        if (!t.at_point.empty())
            item["at_point"] = t.at_point;
        transitions.push_back(std::move(item));
    }
    return {{"params",
             {{"k", report.k},
              {"lambda_min", report.lambda_min},
              {"lambda_max", report.lambda_max},
              {"grid_step", report.grid_step},
              {"bracket_width", report.bracket_width}}},
            {"transitions", std::move(transitions)},
            {"certified", true}};
}

json to_json(const VerificationReport& report)
{
    const auto& g = report.grid;
    json grid{{"k_min", g.k_min},
              {"k_max", g.k_max},
              {"lambda_rule", g.lambda_rule},
              {"lambdas", g.lambdas},
              {"cases", g.cases}};
    if (g.x_max)
        grid["x_max"] = *g.x_max;
    if (g.seed)
        grid["seed"] = *g.seed;

    json failures = json::array();
    for (const auto& f : report.failures)
        failures.push_back({{"params", f.params}, {"expected", f.expected}, {"observed", f.observed}});

    return {{"claim_id", std::string(to_string(report.claim))},
            {"grid", std::move(grid)},
            {"passed", report.passed},
            {"failures", std::move(failures)},
            {"worst_margin", report.worst_margin},
            {"margin_definition", report.margin_definition}};
}

void write_pmf(std::ostream& os, const PmfTable& table, OutputFormat format)
{
    if (format == OutputFormat::json)
        return emit_json(os, to_json(table));

    double cumulative = 0.0;
    if (format == OutputFormat::csv)
    {
        os << "x,pmf,cumulative\n";
        for (std::size_t x = 0; x < table.values.size(); ++x)
        {
            cumulative += table.values[x];
            os << x << ',' << shortest_repr(table.values[x]) << ',' << shortest_repr(cumulative)
               << '\n';
        }
        return;
    }

    os << "# k = " << table.params.k() << ", lambda = " << shortest_repr(table.params.lambda())
       << ", engine = " << to_string(table.engine) << '\n';
    os << std::setw(6) << "x" << "  " << std::setw(22) << "pmf" << "  " << std::setw(22)
       << "cumulative" << '\n';
    for (std::size_t x = 0; x < table.values.size(); ++x)
    {
        cumulative += table.values[x];
        os << std::setw(6) << x << "  " << std::setw(22) << sci(table.values[x]) << "  "
           << std::setw(22) << sci(cumulative) << '\n';
    }
}

void write_mode(std::ostream& os, const ModeResult& result, const ModeBounds& bounds,
                OutputFormat format)
{
    if (format == OutputFormat::json)
        return emit_json(os, to_json(result, bounds));

    std::string lambda = result.exact_lambda ? result.exact_lambda->to_string()
                                             : shortest_repr(result.params.lambda());
    std::string modes = format_modes(result.modes);
    if (format == OutputFormat::csv)
    {
        std::string joined = modes.substr(1, modes.size() - 2);
        for (auto& c : joined)
            if (c == ',')
                c = ';';
        os << "k,lambda,path,modes,max_prob,lower,upper,search_bound,certified\n"
           << result.params.k() << ',' << lambda << ',' << (result.exact_lambda ? "exact" : "float")
           << ',' << joined << ',' << shortest_repr(result.max_prob) << ',' << bounds.lower << ','
           << bounds.upper << ',' << result.search_bound << ','
           << (result.certified ? "true" : "false") << '\n';
        return;
    }

    os << "k            " << result.params.k() << '\n'
       << "lambda       " << lambda << '\n'
       << "path         " << (result.exact_lambda ? "exact" : "float") << '\n'
       << "modes=" << modes << '\n'
       << "max_prob     " << sci(result.max_prob) << '\n'
       << "bounds       [" << bounds.lower << ", " << bounds.upper << "]\n"
       << "search_bound " << result.search_bound << '\n'
       << "certified    " << (result.certified ? "yes" : "no") << '\n';
}

void write_scan(std::ostream& os, const ThresholdReport& report, OutputFormat format)
{
    if (format == OutputFormat::json)
        return emit_json(os, to_json(report));

    if (format == OutputFormat::csv)
    {
        os << "lambda_star,lambda_lo,lambda_hi,below,above,at_point\n";
        for (const auto& t : report.transitions)
            os << shortest_repr(t.lambda_star) << ',' << shortest_repr(t.lambda_lo) << ','
               << shortest_repr(t.lambda_hi) << ",\"" << format_modes(t.below) << "\",\""
               << format_modes(t.above) << "\",\""
               << (t.at_point.empty() ? "" : format_modes(t.at_point)) << "\"\n";
        return;
    }

    os << "# k = " << report.k << ", lambda in [" << shortest_repr(report.lambda_min) << ", "
       << shortest_repr(report.lambda_max) << "], step " << shortest_repr(report.grid_step) << '\n';
    if (report.transitions.empty())
        os << "no transitions\n";
    for (const auto& t : report.transitions)
    {
        os << "lambda* = " << std::setprecision(12) << std::fixed << t.lambda_star
           << std::defaultfloat << "  " << format_modes(t.below) << " -> "
           << format_modes(t.above);
        if (!t.at_point.empty())
            os << "  (tie " << format_modes(t.at_point) << " at this point)";
        os << "  bracket [" << shortest_repr(t.lambda_lo) << ", " << shortest_repr(t.lambda_hi)
           << "]\n";
    }
}

void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                   OutputFormat format)
{
    bool all_passed = true;
    for (const auto& r : reports)
        all_passed = all_passed && r.passed;

    if (format == OutputFormat::json)
    {
        json list = json::array();
        for (const auto& r : reports)
            list.push_back(to_json(r));
        return emit_json(os, {{"reports", std::move(list)}, {"passed", all_passed}});
    }

    if (format == OutputFormat::csv)
    {
        os << "claim_id,passed,cases,failures,worst_margin\n";
        for (const auto& r : reports)
            os << to_string(r.claim) << ',' << (r.passed ? "true" : "false") << ','
               << r.grid.cases << ',' << r.failures.size() << ',' << shortest_repr(r.worst_margin)
               << '\n';
        return;
    }

    for (const auto& r : reports)
    {
        os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(20) << to_string(r.claim)
           << std::right << " cases=" << std::setw(6) << r.grid.cases
           << "  worst_margin=" << shortest_repr(r.worst_margin) << '\n';
        for (const auto& f : r.failures)
            os << "      " << f.params << ": expected " << f.expected << ", observed "
               << f.observed << '\n';
    }
    os << (all_passed ? "all claims verified\n" : "verification FAILED\n");
}

} // namespace pok
