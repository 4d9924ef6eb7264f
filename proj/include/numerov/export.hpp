#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/potential.hpp"
#include "numerov/run.hpp"

namespace numerov {

/// Formats with 17 significant digits so every double reads back exactly.
std::string format_number(double value);

/// Columns x, psi_1 .. psi_n; `header` lines are written with a '#' prefix.
void write_function_table(const std::filesystem::path& path, const Grid& grid,
                          const std::vector<std::span<const double>>& columns,
                          const std::vector<std::string>& header);

/// Columns x, V(x); points where V is singular are skipped.
void write_potential_table(const std::filesystem::path& path, const Grid& grid,
                           const PotentialModel& v);

/// Parses a table written by write_function_table / write_potential_table
/// back into columns.
std::vector<std::vector<double>> read_table(const std::filesystem::path& path);

/// Potential curve plus eigenfunctions drawn at their energies.
std::string render_svg(const RunReport& report);

struct ExportOptions {
  bool include_timing = true;
  bool svg = false;
};

/// Writes report.json, eigenfunctions.dat (max |psi| = 1 per column),
/// eigenfunctions_normalized.dat (unit Simpson norm), potential.dat and,
/// optionally, plot.svg into `dir`. Throws Error(io) when a file cannot be
/// written.
void export_run(const RunReport& report, const std::filesystem::path& dir,
                const ExportOptions& options);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace numerov
