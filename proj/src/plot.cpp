#include "subosc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace subosc {
namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kLeft = 90.0;
constexpr double kRight = 160.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string fmt(double v, const char* spec = "%.6g") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : spec.series) {
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  for (const auto& m : spec.markers) {
    ymin = std::min({ymin, m.y0, m.y1});
    ymax = std::max({ymax, m.y0, m.y1});
  }
  if (!(xmax > xmin)) { xmin -= 1.0; xmax += 1.0; }
  if (!(ymax > ymin)) { ymin -= 1.0; ymax += 1.0; }
  const double pad = 0.05 * (ymax - ymin);
  ymin -= pad;
  ymax += pad;

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * ph; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << kLeft << "\" y=\"24\" font-size=\"15\">" << escape(spec.title)
      << "</text>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"black\"/>\n";

  constexpr int kTicks = 5;
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xmin + (xmax - xmin) * i / kTicks;
    const double yv = ymin + (ymax - ymin) * i / kTicks;
    svg << "<line x1=\"" << fmt(px(xv)) << "\" y1=\"" << kTop + ph << "\" x2=\"" << fmt(px(xv))
        << "\" y2=\"" << kTop + ph + 5 << "\" stroke=\"black\"/>";
    svg << "<text x=\"" << fmt(px(xv)) << "\" y=\"" << kTop + ph + 20
        << "\" text-anchor=\"middle\">" << fmt(xv, "%.4g") << "</text>\n";
    svg << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << fmt(py(yv)) << "\" x2=\"" << kLeft
        << "\" y2=\"" << fmt(py(yv)) << "\" stroke=\"black\"/>";
    svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << fmt(py(yv) + 4)
        << "\" text-anchor=\"end\">" << fmt(yv, "%.4g") << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n";
  svg << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" transform=\"rotate(-90 20 "
      << kTop + ph / 2 << ")\" text-anchor=\"middle\">" << escape(spec.y_label) << "</text>\n";

  for (const auto& m : spec.markers) {
    svg << "<line x1=\"" << fmt(px(m.x)) << "\" y1=\"" << fmt(py(m.y0)) << "\" x2=\""
        << fmt(px(m.x)) << "\" y2=\"" << fmt(py(m.y1))
        << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  }

  for (std::size_t k = 0; k < spec.series.size(); ++k) {
    const auto& s = spec.series[k];
    std::ostringstream path;
    bool pen_down = false;
    for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
      if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) {
        pen_down = false;
        continue;
      }
      path << (pen_down ? " L" : " M") << fmt(px(s.x[i]), "%.2f") << ' '
           << fmt(py(s.y[i]), "%.2f");
      pen_down = true;
    }
    svg << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << s.color
        << "\" stroke-width=\"1.2\"" << (s.dashed ? " stroke-dasharray=\"6 4\"" : "")
        << "/>\n";
    const double ly = kTop + 16.0 + 18.0 * static_cast<double>(k);
    svg << "<line x1=\"" << kWidth - kRight + 12 << "\" y1=\"" << ly << "\" x2=\""
        << kWidth - kRight + 36 << "\" y2=\"" << ly << "\" stroke=\"" << s.color << "\""
        << (s.dashed ? " stroke-dasharray=\"6 4\"" : "") << "/>";
    svg << "<text x=\"" << kWidth - kRight + 42 << "\" y=\"" << ly + 4 << "\">"
        << escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace subosc
