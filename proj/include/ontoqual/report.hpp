#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ontoqual/compare.hpp"

namespace ontoqual::report {

// text: aligned tables, values rounded to 2 decimals.
// csv/json: full-precision values plus the rounded rendering.
enum class OutputFormat { Text, Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view text);

// Rounds half away from zero to 2 decimals, e.g. 64.8144 -> "64.81".
std::string format_2dp(double value);

// Shortest representation that round-trips the double exactly.
std::string format_full(double value);

// Signed 2-decimal delta: "+10.66", "-0.42", "+0.00".
std::string format_delta_2dp(double value);

std::string render_evaluation(const RequirementsModel& model,
                              const EntityEvaluation& ev, OutputFormat format);

std::string render_comparison(const RequirementsModel& model,
                              const ComparisonReport& rep, OutputFormat format);

std::string render_improvement(const RequirementsModel& model,
                               const ImprovementReport& rep,
                               OutputFormat format);

// x,score samples of one canonical indicator: step 0.5 over its domain, or
// integer steps 0..10 for the glossary count. Throws DomainError for an
// unknown indicator name.
std::string render_plot_data(std::string_view indicator_name);

// Diagnostic listing of every violation, one line each.
std::string render_violations(std::string_view source_label,
                              const ValidationReport& report);

} // namespace ontoqual::report
