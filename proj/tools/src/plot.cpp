#include "plot.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <vector>

namespace abcopt::cli {

namespace {

constexpr double kPanelWidth = 520;
constexpr double kPanelHeight = 300;
constexpr double kMarginLeft = 80;
constexpr double kMarginRight = 20;
constexpr double kMarginTop = 40;
constexpr double kMarginBottom = 50;

const char* const kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                "#59a14f", "#edc948", "#b07aa1", "#ff9da7"};

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

Measure parse_measure(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (key == "sd") return Measure::sd;
  if (key == "me") return Measure::me;
  if (key == "afe") return Measure::afe;
  if (key == "sr") return Measure::sr;
  throw ConfigError("unknown measure '" + std::string(name) + "'; valid measures: sd, me, afe, sr");
}

std::string_view measure_label(Measure m) {
  switch (m) {
    case Measure::sd: return "SD";
    case Measure::me: return "ME";
    case Measure::afe: return "AFE";
    case Measure::sr: return "SR";
  }
  return "?";
}

double measure_value(const Summary& s, Measure m) {
  switch (m) {
    case Measure::sd: return s.sd;
    case Measure::me: return s.me;
    case Measure::afe: return s.afe;
    case Measure::sr: return s.sr;
  }
  return 0.0;
}

std::string render_bar_chart(std::span<const Summary> summaries, Measure measure) {
  if (summaries.empty()) throw ConfigError("no results to plot");

  std::vector<std::string> problems;
  std::vector<std::string> algorithms;
  for (const auto& s : summaries) {
    if (std::find(problems.begin(), problems.end(), s.problem) == problems.end()) {
      problems.push_back(s.problem);
    }
    if (std::find(algorithms.begin(), algorithms.end(), s.algorithm) == algorithms.end()) {
      algorithms.push_back(s.algorithm);
    }
  }

  const std::string label(measure_label(measure));
  const double total_height = kPanelHeight * static_cast<double>(problems.size());
  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt("%.0f", kPanelWidth) +
         "\" height=\"" + fmt("%.0f", total_height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";

  for (std::size_t p = 0; p < problems.size(); ++p) {
    std::vector<const Summary*> row;
    for (const auto& s : summaries) {
      if (s.problem == problems[p]) row.push_back(&s);
    }
    double max_value = 0.0;
    for (const Summary* s : row) max_value = std::max(max_value, measure_value(*s, measure));
    if (!(max_value > 0.0)) max_value = 1.0;

    const double y0 = kPanelHeight * static_cast<double>(p);
    const double plot_w = kPanelWidth - kMarginLeft - kMarginRight;
    const double plot_h = kPanelHeight - kMarginTop - kMarginBottom;
    const double base_y = y0 + kMarginTop + plot_h;
    const double slot = plot_w / static_cast<double>(row.size());
    const double bar_w = slot * 0.6;

    svg += "<g class=\"panel\" data-problem=\"" + escape(problems[p]) + "\" data-measure=\"" +
           label + "\">\n";
    svg += "<text x=\"" + fmt("%.1f", kPanelWidth / 2) + "\" y=\"" + fmt("%.1f", y0 + 20) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + label + " for " + escape(problems[p]) +
           "</text>\n";
    svg += "<line x1=\"" + fmt("%.1f", kMarginLeft) + "\" y1=\"" + fmt("%.1f", base_y) + "\" x2=\"" +
           fmt("%.1f", kMarginLeft + plot_w) + "\" y2=\"" + fmt("%.1f", base_y) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt("%.1f", kMarginLeft) + "\" y1=\"" + fmt("%.1f", y0 + kMarginTop) +
           "\" x2=\"" + fmt("%.1f", kMarginLeft) + "\" y2=\"" + fmt("%.1f", base_y) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt("%.1f", kMarginLeft - 6) + "\" y=\"" + fmt("%.1f", y0 + kMarginTop + 4) +
           "\" text-anchor=\"end\">" + fmt("%.4g", max_value) + "</text>\n";
    svg += "<text x=\"" + fmt("%.1f", kMarginLeft - 6) + "\" y=\"" + fmt("%.1f", base_y + 4) +
           "\" text-anchor=\"end\">0</text>\n";

    for (std::size_t i = 0; i < row.size(); ++i) {
      const Summary& s = *row[i];
      const double value = measure_value(s, measure);
      const double h = plot_h * std::max(0.0, value) / max_value;
      const double x = kMarginLeft + slot * static_cast<double>(i) + (slot - bar_w) / 2;
      const auto colour = std::find(algorithms.begin(), algorithms.end(), s.algorithm) - algorithms.begin();
      svg += "<rect class=\"bar\" data-algorithm=\"" + escape(s.algorithm) + "\" data-value=\"" +
             fmt("%.17g", value) + "\" x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", base_y - h) +
             "\" width=\"" + fmt("%.2f", bar_w) + "\" height=\"" + fmt("%.2f", h) + "\" fill=\"" +
             kPalette[static_cast<std::size_t>(colour) % std::size(kPalette)] + "\"/>\n";
      svg += "<text x=\"" + fmt("%.2f", x + bar_w / 2) + "\" y=\"" + fmt("%.1f", base_y + 16) +
             "\" text-anchor=\"middle\">" + escape(s.algorithm) + "</text>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace abcopt::cli
