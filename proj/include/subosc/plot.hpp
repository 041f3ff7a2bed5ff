#pragma once

#include <string>
#include <vector>

namespace subosc {

struct PlotSeries {
  std::string label;
  std::string color = "#1f77b4";
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

// Vertical marks, e.g. spectral discontinuities.
struct PlotMarker {
  double x = 0.0;
  double y0 = 0.0;
  double y1 = 0.0;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
  std::vector<PlotMarker> markers;
};

// Static line chart. Non-finite samples break the polyline.
std::string render_svg(const PlotSpec& spec);

}  // namespace subosc
