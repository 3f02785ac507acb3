#include "swalk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "swalk/errors.hpp"
#include "swalk/trapezoid.hpp"

namespace swalk {

namespace {

const char* fill_for(Orientation o) {
  static const char* kFill[] = {"#f3d9a4", "#c9e4c5", "#b9d3ee", "#f2c4ce", "#d8c8ef", "#e8e8b0"};
  return kFill[static_cast<int>(o)];
}

struct Frame {
  double min_x = std::numeric_limits<double>::max();
  double min_y = std::numeric_limits<double>::max();
  double max_x = std::numeric_limits<double>::lowest();
  double max_y = std::numeric_limits<double>::lowest();
};

double sx(const PlanePoint& p) { return static_cast<double>(p.x); }
// SVG y grows downwards.
double sy(const PlanePoint& p) { return -static_cast<double>(p.y3) * std::sqrt(3.0); }

std::string polygon(const Trapezoid& t, const char* fill, const char* stroke, double width) {
  std::string pts;
  char buf[64];
  for (const auto& v : t.v) {
    std::snprintf(buf, sizeof buf, "%.3f,%.3f ", sx(v), sy(v));
    pts += buf;
  }
  pts.pop_back();
  char head[160];
  std::snprintf(head, sizeof head, "<polygon fill=\"%s\" stroke=\"%s\" stroke-width=\"%.3f\" points=\"", fill, stroke,
                width);
  return head + pts + "\"/>\n";
}

}  // namespace

std::string draw_trapezoids_svg(std::size_t count, bool recursive) {
  if (count == 0) throw DomainError("nothing to draw");
  std::vector<std::vector<Trapezoid>> layers;
  layers.push_back(order_n_chain(0, count));
  if (recursive) {
    std::size_t span = 7;
    for (int order = 1; span <= count; ++order, span *= 7) layers.push_back(order_n_chain(order, count / span));
  }

  Frame f;
  for (const auto& layer : layers) {
    for (const auto& t : layer) {
      for (const auto& v : t.v) {
        f.min_x = std::min(f.min_x, sx(v));
        f.max_x = std::max(f.max_x, sx(v));
        f.min_y = std::min(f.min_y, sy(v));
        f.max_y = std::max(f.max_y, sy(v));
      }
    }
  }
  const double pad = 4.0;
  const double w = f.max_x - f.min_x + 2 * pad;
  const double h = f.max_y - f.min_y + 2 * pad;
  const double unit = std::max(w, h) / 1200.0;

  std::string out;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.3f %.3f %.3f %.3f\" width=\"1200\" "
                "height=\"%.0f\">\n",
                f.min_x - pad, f.min_y - pad, w, h, 1200.0 * h / w);
  out += buf;
  for (const auto& t : layers[0]) out += polygon(t, fill_for(t.orientation), "#333333", 0.6 * unit);
  for (std::size_t n = 1; n < layers.size(); ++n) {
    for (const auto& t : layers[n]) out += polygon(t, "none", "#a01010", (1.0 + n) * unit);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace swalk
