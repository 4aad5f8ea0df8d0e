#include "ineqcli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ineqcli {
namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 320.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 45.0;

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

std::string escape(const std::string& s) {
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

void write_path_svg(std::ostream& os, std::span<const ineq::PathPoint> path,
                    const std::string& title) {
  if (path.size() < 2) throw std::invalid_argument("svg: need at least 2 points");
  auto [lo_it, hi_it] = std::minmax_element(
      path.begin(), path.end(),
      [](const ineq::PathPoint& a, const ineq::PathPoint& b) {
        return a.value < b.value;
      });
  double lo = lo_it->value;
  double hi = hi_it->value;
  const double pad = std::max(1e-3, 0.05 * (hi - lo));
  lo -= pad;
  hi += pad;

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double l) { return kLeft + l * plot_w; };
  auto py = [&](double v) { return kTop + (hi - v) / (hi - lo) * plot_h; };

  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"11\">\n"
     << "  <title>" << escape(title) << "</title>\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" fill=\"white\"/>\n"
     << "  <text x=\"" << kWidth / 2 << "\" y=\"18\" text-anchor=\"middle\">"
     << escape(title) << "</text>\n";

  const double x0 = px(0.0);
  const double x1 = px(1.0);
  const double y0 = kTop + plot_h;
  os << "  <line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1
     << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n"
     << "  <line x1=\"" << x0 << "\" y1=\"" << kTop << "\" x2=\"" << x0
     << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double x = px(t);
    os << "  <line x1=\"" << x << "\" y1=\"" << y0 << "\" x2=\"" << x
       << "\" y2=\"" << y0 + 5 << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << x << "\" y=\"" << y0 + 18
       << "\" text-anchor=\"middle\">" << fmt("%.2f", t) << "</text>\n";
  }
  for (double v : {lo_it->value, hi_it->value}) {
    const double y = py(v);
    os << "  <line x1=\"" << x0 - 5 << "\" y1=\"" << y << "\" x2=\"" << x0
       << "\" y2=\"" << y << "\" stroke=\"black\"/>\n"
       << "  <text x=\"" << x0 - 8 << "\" y=\"" << y + 4
       << "\" text-anchor=\"end\">" << fmt("%.3f", v) << "</text>\n";
  }
  os << "  <text x=\"" << (x0 + x1) / 2 << "\" y=\"" << kHeight - 8
     << "\" text-anchor=\"middle\">lambda</text>\n";

  os << "  <polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" "
        "points=\"";
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) os << ' ';
    os << fmt("%.2f", px(path[i].lambda)) << ',' << fmt("%.2f", py(path[i].value));
  }
  os << "\"/>\n</svg>\n";
}

}  // namespace ineqcli
