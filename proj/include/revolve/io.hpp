#pragma once

#include <string>
#include <utility>
#include <vector>

namespace revolve::io {

/// Shortest exact decimal form (17 significant digits) so CSV re-reads
/// reproduce the double bit-for-bit.
std::string fmt17(double v);

/// Compact %g form for labels and spec strings.
std::string fmt_g(double v);

/// Profile table with header `theta,rho`. Writers emit fmt17 values;
/// readers validate the header, strict monotonicity and the [0, pi/2]
/// endpoints, and throw std::runtime_error on malformed input.
void write_profile_csv(const std::string& path, const std::vector<double>& theta,
                       const std::vector<double>& rho);
std::pair<std::vector<double>, std::vector<double>>
read_profile_csv(const std::string& path);

/// Generic small CSV: fixed header line, rows of fmt17 doubles (strings
/// pass through verbatim).
struct CsvTable {
  std::string header;
  std::vector<std::vector<std::string>> rows;
};
void write_csv(const std::string& path, const CsvTable& table);

/// One polyline chart, fixed 800x600 viewBox, self-contained SVG.
struct SvgSeries {
  std::string label;
  std::vector<double> x, y;
};
void write_svg_polylines(const std::string& path, const std::string& title,
                         const std::vector<SvgSeries>& series);

/// Serialized operator step: {"n":..., "cn_mode":"one"|"true",
/// "theta":[...], "rho":[...], "err_est":...}.
std::string operator_result_json(int n, bool true_cn,
                                 const std::vector<double>& theta,
                                 const std::vector<double>& rho, double err_est);

void write_text_file(const std::string& path, const std::string& content);

} // namespace revolve::io
