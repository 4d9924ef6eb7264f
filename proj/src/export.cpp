#include "numerov/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "numerov/error.hpp"

namespace numerov {
namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
  return out;
}

void finish_write(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::io, "write failed for " + path.string());
}

}  // namespace

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  auto out = open_for_write(path);
  out << content;
  finish_write(out, path);
}

void write_function_table(const std::filesystem::path& path, const Grid& grid,
                          const std::vector<std::span<const double>>& columns,
                          const std::vector<std::string>& header) {
  for (const auto& column : columns) {
    if (column.size() != grid.dim) throw Error(ErrorCode::domain, "column length does not match grid");
  }
  auto out = open_for_write(path);
  for (const auto& line : header) out << "# " << line << '\n';
  for (std::size_t i = 0; i < grid.dim; ++i) {
    out << format_number(grid.point(i));
    for (const auto& column : columns) out << ' ' << format_number(column[i]);
    out << '\n';
  }
  finish_write(out, path);
}

void write_potential_table(const std::filesystem::path& path, const Grid& grid,
                           const PotentialModel& v) {
  auto out = open_for_write(path);
  out << "# x V(x)\n# " << v.description() << '\n';
  for (std::size_t i = 0; i < grid.dim; ++i) {
    const double x = grid.point(i);
    double value = 0.0;
    try {
      value = v.evaluate(x);
    } catch (const Error&) {
      continue;
    }
    out << format_number(x) << ' ' << format_number(value) << '\n';
  }
  finish_write(out, path);
}

std::vector<std::vector<double>> read_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open " + path.string());
  std::vector<std::vector<double>> columns;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string token;
    std::size_t c = 0;
    while (fields >> token) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw Error(ErrorCode::io, "malformed number '" + token + "' in " + path.string());
      }
      if (c == columns.size()) columns.emplace_back();
      columns[c++].push_back(value);
    }
  }
  return columns;
}

std::string render_svg(const RunReport& report) {
  constexpr double width = 800.0;
  constexpr double height = 500.0;
  constexpr double margin = 50.0;
  static constexpr const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#17becf"};

  const auto& grid = report.grid;
  const auto& v = report.setup.potential;

  double e_lo = report.setup.config.e_in;
  double e_hi = report.setup.config.v_max;
  for (const auto& s : report.states) {
    e_lo = std::min(e_lo, s.numerov.energy);
    e_hi = std::max(e_hi, s.numerov.energy);
  }
  const double span = e_hi - e_lo;
  e_lo -= 0.1 * span;
  e_hi += 0.1 * span;
  // Wavefunctions are drawn with an amplitude of a fraction of the energy window.
  const double amplitude = 0.08 * span;

  auto sx = [&](double x) { return margin + (x - grid.a) / (grid.b - grid.a) * (width - 2 * margin); };
  auto sy = [&](double e) {
    const double clamped = std::clamp(e, e_lo, e_hi);
    return height - margin - (clamped - e_lo) / (e_hi - e_lo) * (height - 2 * margin);
  };

  std::ostringstream svg;
  svg.precision(6);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-size=\"14\">"
      << report.setup.name << ": " << v.description() << "</text>\n";

  const std::size_t stride = std::max<std::size_t>(1, grid.dim / 1000);
  svg << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < grid.dim; i += stride) {
    double value = 0.0;
    try {
      value = v.evaluate(grid.point(i));
    } catch (const Error&) {
      continue;
    }
    svg << sx(grid.point(i)) << ',' << sy(value) << ' ';
  }
  svg << "\"/>\n";

  for (std::size_t m = 0; m < report.states.size(); ++m) {
    const auto& s = report.states[m];
    const char* color = colors[m % std::size(colors)];
    svg << "<line x1=\"" << margin << "\" x2=\"" << width - margin << "\" y1=\""
        << sy(s.numerov.energy) << "\" y2=\"" << sy(s.numerov.energy) << "\" stroke=\"" << color
        << "\" stroke-dasharray=\"4 4\"/>\n";
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\"";
    for (std::size_t i = 0; i < grid.dim; i += stride) {
      svg << sx(grid.point(i)) << ',' << sy(s.numerov.energy + amplitude * s.numerov.psi[i]) << ' ';
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void export_run(const RunReport& report, const std::filesystem::path& dir,
                const ExportOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create output directory " + dir.string());

  write_text_file(dir / "report.json", report_to_json(report, options.include_timing).dump(2) + "\n");

  std::vector<std::span<const double>> amplitude;
  std::vector<std::span<const double>> normalized;
  std::string names = "x";
  for (std::size_t m = 0; m < report.states.size(); ++m) {
    amplitude.emplace_back(report.states[m].numerov.psi);
    normalized.emplace_back(report.states[m].psi_normalized);
    names += " psi_" + std::to_string(m + 1);
  }
  const std::string units = report.setup.potential.kind() == PotentialKind::hydrogen_reduced
                                ? "x in Bohr radii, energies in Rydberg"
                                : "dimensionless x and energies";
  std::vector<std::string> energies;
  for (std::size_t m = 0; m < report.states.size(); ++m) {
    energies.push_back("E_" + std::to_string(m + 1) + " = " +
                       format_number(report.states[m].numerov.energy));
  }

  std::vector<std::string> header = {report.setup.name + " eigenfunctions", units,
                                     "normalization: amplitude (max |psi| = 1 per column)"};
  header.insert(header.end(), energies.begin(), energies.end());
  header.push_back(names);
  write_function_table(dir / "eigenfunctions.dat", report.grid, amplitude, header);

  header[2] = "normalization: probability (Simpson integral of psi^2 over [a, b] = 1)";
  write_function_table(dir / "eigenfunctions_normalized.dat", report.grid, normalized, header);

  write_potential_table(dir / "potential.dat", report.grid, report.setup.potential);
  if (options.svg) write_text_file(dir / "plot.svg", render_svg(report));
}

}  // namespace numerov
