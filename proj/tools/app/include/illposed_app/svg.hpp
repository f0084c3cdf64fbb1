#pragma once

#include <string>
#include <vector>

namespace illposed::app {

struct PlotSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool markers = false;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<PlotSeries> series;
};

// Self-contained SVG: axes, min/max tick labels, one polyline per series.
std::string render_svg(const PlotSpec& plot);

}  // namespace illposed::app
