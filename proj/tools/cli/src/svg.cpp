#include "tropmirror_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tropmirror/tropical/hausdorff.hpp"
#include "tropmirror_cli/export.hpp"

namespace tropmirror::cli {
namespace {

constexpr double kSize = 800.0;

struct Viewport {
  std::array<double, 4> w;
  double x(double u) const { return (u - w[0]) / (w[1] - w[0]) * kSize; }
  double y(double v) const { return kSize - (v - w[2]) / (w[3] - w[2]) * kSize; }
};

std::string num(double v) { return format_double(std::round(v * 100.0) / 100.0); }

}  // namespace

std::string overlay_svg(const tropical::TropicalComplex& pi, const std::vector<std::vector<double>>& cloud,
                        const std::array<double, 4>& window, const std::string& timestamp) {
  const Viewport vp{window};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  svg << "<!-- generated " << timestamp << " -->\n";
  svg << "<metadata>world " << format_double(window[0]) << ' ' << format_double(window[1]) << ' '
      << format_double(window[2]) << ' ' << format_double(window[3]) << " viewport 0 800 800 0</metadata>\n";
  svg << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";

  if (pi.moment_polytope && pi.moment_polytope->dim() == 2) {
    // vertices of a 2D polytope come back unordered; sort by angle about the centroid
    auto verts = pi.moment_polytope->vertices();
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : verts) pts.emplace_back(v[0].convert_to<double>(), v[1].convert_to<double>());
    double cx = 0, cy = 0;
    for (const auto& [a, b] : pts) cx += a, cy += b;
    cx /= pts.size();
    cy /= pts.size();
    std::sort(pts.begin(), pts.end(), [&](const auto& p, const auto& q) {
      return std::atan2(p.second - cy, p.first - cx) < std::atan2(q.second - cy, q.first - cx);
    });
    svg << "<polygon fill=\"#dde8f5\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
      svg << (i ? " " : "") << num(vp.x(pts[i].first)) << ',' << num(vp.y(pts[i].second));
    svg << "\"/>\n";
  }

  svg << "<g fill=\"#888888\">\n";
  for (const auto& p : cloud) {
    if (p.size() < 2 || p[0] < window[0] || p[0] > window[1] || p[1] < window[2] || p[1] > window[3]) continue;
    svg << "<circle cx=\"" << num(vp.x(p[0])) << "\" cy=\"" << num(vp.y(p[1])) << "\" r=\"1\"/>\n";
  }
  svg << "</g>\n";

  tropical::Window win{{window[0], window[2]}, {window[1], window[3]}};
  const double spacing = std::max(window[1] - window[0], window[3] - window[2]) / 400.0;
  svg << "<g fill=\"black\">\n";
  for (const auto& p : tropical::sample_complex(pi, win, spacing))
    svg << "<rect x=\"" << num(vp.x(p[0]) - 0.75) << "\" y=\"" << num(vp.y(p[1]) - 0.75)
        << "\" width=\"1.5\" height=\"1.5\"/>\n";
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace tropmirror::cli
