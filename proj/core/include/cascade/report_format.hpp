#pragma once

// Serialization of noise reports, scenario series and APD summaries as an
// aligned text table, headered CSV, or JSON. Machine formats (csv, json)
// carry 12 significant digits and are byte-identical for identical input.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/apd.hpp"
#include "cascade/engine.hpp"
#include "cascade/network.hpp"
#include "cascade/scenario.hpp"

namespace cascade {

enum class ReportFormat { table, csv, json };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// %.12g; "nan"/"inf" for non-finite values.
std::string format_number(double value);

/// `value` rounded to 12 significant digits.
double round_to_output_precision(double value);

std::string render_noise_report(const CascadeNetwork& network, const NoiseReport& report,
                                ReportFormat format, bool emit_db);

/// Reads the per-stage and totals sections of a JSON noise report.
NoiseReport parse_noise_report_json(std::string_view text);

std::string render_series(const std::vector<SeriesTable>& tables, ReportFormat format);

std::string render_apd(const StaircaseApd& apd, const std::optional<McEstimate>& monte_carlo,
                       ReportFormat format);

}  // namespace cascade
