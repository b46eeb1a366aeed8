#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "pok/format.hpp"
#include "pok/modes.hpp"
#include "pok/pmf.hpp"
#include "pok/threshold.hpp"
#include "pok/verify.hpp"

namespace pok {

enum class OutputFormat
{
    csv,
    json,
    plain,
};

std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

nlohmann::json to_json(const PmfTable& table);
nlohmann::json to_json(const ModeResult& result, const ModeBounds& bounds);
nlohmann::json to_json(const ThresholdReport& report);
nlohmann::json to_json(const VerificationReport& report);

/// Inverse of to_json(PmfTable); the cumulative column is ignored.
PmfTable pmf_table_from_json(const nlohmann::json& doc);

void write_pmf(std::ostream& os, const PmfTable& table, OutputFormat format);
void write_mode(std::ostream& os, const ModeResult& result, const ModeBounds& bounds,
                OutputFormat format);
void write_scan(std::ostream& os, const ThresholdReport& report, OutputFormat format);
void write_reports(std::ostream& os, const std::vector<VerificationReport>& reports,
                   OutputFormat format);

} // namespace pok
