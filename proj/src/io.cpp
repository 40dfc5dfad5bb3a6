#include "revolve/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace revolve::io {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_g(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

void write_profile_csv(const std::string& path, const std::vector<double>& theta,
                       const std::vector<double>& rho) {
  if (theta.size() != rho.size())
    throw std::runtime_error("profile columns differ in length");
  std::string body = "theta,rho\n";
  for (size_t i = 0; i < theta.size(); ++i)
    body += fmt17(theta[i]) + "," + fmt17(rho[i]) + "\n";
  write_text_file(path, body);
}

std::pair<std::vector<double>, std::vector<double>>
read_profile_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile CSV: " + path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty profile CSV: " + path);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "theta,rho")
    throw std::runtime_error("profile CSV must start with 'theta,rho': " + path);
  std::vector<double> theta, rho;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("malformed profile CSV row: " + line);
    char* end = nullptr;
    const std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    const double t = std::strtod(a.c_str(), &end);
    if (end != a.c_str() + a.size()) throw std::runtime_error("bad theta: " + a);
    const double r = std::strtod(b.c_str(), &end);
    if (end != b.c_str() + b.size()) throw std::runtime_error("bad rho: " + b);
    theta.push_back(t);
    rho.push_back(r);
  }
  return {std::move(theta), std::move(rho)};
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::string body = table.header + "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) body += ",";
      body += row[i];
    }
    body += "\n";
  }
  write_text_file(path, body);
}

void write_svg_polylines(const std::string& path, const std::string& title,
                         const std::vector<SvgSeries>& series) {
  constexpr double W = 800, H = 600, ML = 70, MR = 25, MT = 45, MB = 45;
  double xmin = HUGE_VAL, xmax = -HUGE_VAL, ymin = HUGE_VAL, ymax = -HUGE_VAL;
  for (const auto& s : series)
    for (size_t i = 0; i < s.x.size(); ++i) {
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto px = [&](double x) { return ML + (x - xmin) / (xmax - xmin) * (W - ML - MR); };
  auto py = [&](double y) { return H - MB - (y - ymin) / (ymax - ymin) * (H - MT - MB); };
  auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };

  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                  "#9467bd", "#ff7f0e", "#8c564b"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 600\">\n"
      << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n"
      << "<text x=\"400\" y=\"26\" text-anchor=\"middle\" font-family=\"sans-serif\""
      << " font-size=\"17\">" << title << "</text>\n"
      << "<rect x=\"" << num(ML) << "\" y=\"" << num(MT) << "\" width=\""
      << num(W - ML - MR) << "\" height=\"" << num(H - MT - MB)
      << "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg << "<text x=\"" << num(ML) << "\" y=\"" << num(H - MB + 18)
      << "\" font-family=\"sans-serif\" font-size=\"12\">" << fmt_g(xmin) << "</text>\n"
      << "<text x=\"" << num(W - MR) << "\" y=\"" << num(H - MB + 18)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << fmt_g(xmax) << "</text>\n"
      << "<text x=\"" << num(ML - 6) << "\" y=\"" << num(H - MB)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << fmt_g(ymin) << "</text>\n"
      << "<text x=\"" << num(ML - 6) << "\" y=\"" << num(MT + 10)
      << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
      << fmt_g(ymax) << "</text>\n";
  for (size_t s = 0; s < series.size(); ++s) {
    svg << "<polyline fill=\"none\" stroke=\"" << palette[s % 6]
        << "\" stroke-width=\"1.6\" points=\"";
    for (size_t i = 0; i < series[s].x.size(); ++i) {
      if (i) svg << " ";
      svg << num(px(series[s].x[i])) << "," << num(py(series[s].y[i]));
    }
    svg << "\"/>\n";
    if (!series[s].label.empty())
      svg << "<text x=\"" << num(W - MR - 8) << "\" y=\"" << num(MT + 20 + 16.0 * s)
          << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\""
          << " fill=\"" << palette[s % 6] << "\">" << series[s].label << "</text>\n";
  }
  svg << "</svg>\n";
  write_text_file(path, svg.str());
}

std::string operator_result_json(int n, bool true_cn,
                                 const std::vector<double>& theta,
                                 const std::vector<double>& rho, double err_est) {
  std::string out = "{\"n\": " + std::to_string(n) + ", \"cn_mode\": \"" +
                    (true_cn ? "true" : "one") + "\", \"theta\": [";
  for (size_t i = 0; i < theta.size(); ++i) {
    if (i) out += ", ";
    out += fmt17(theta[i]);
  }
  out += "], \"rho\": [";
  for (size_t i = 0; i < rho.size(); ++i) {
    if (i) out += ", ";
    out += fmt17(rho[i]);
  }
  out += "], \"err_est\": " + fmt17(err_est) + "}";
  return out;
}

} // namespace revolve::io
