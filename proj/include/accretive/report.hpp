#pragma once

// Report serialization: the JSON document written by `verify`, its parser,
// the margin histogram, and the one-line-per-case summary table.

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "accretive/verify.hpp"

namespace accretive {

struct Histogram {
  /// bins + 1 ascending edges.
  std::vector<double> edges;
  std::vector<int> counts;
};

/// Equal-width bins over [min, max] of the finite margins.
Histogram margin_histogram(std::span<const double> margins, int bins = 20);

/// {"reports": [...], "pass": bool}. With include_wall_time = false the
/// wall_time fields are written as 0, so two runs compare byte for byte.
std::string reports_to_json(std::span<const InequalityReport> reports, bool include_wall_time = true);

/// Inverse of reports_to_json (the histogram is derived data and is skipped).
std::vector<InequalityReport> reports_from_json(const std::string& text);

void write_reports(const std::filesystem::path& path, std::span<const InequalityReport> reports);

std::string summary_table(std::span<const InequalityReport> reports);

/// 0 iff every report passes.
int exit_code(std::span<const InequalityReport> reports) noexcept;

}  // namespace accretive
