#pragma once

#include <cstddef>
#include <vector>

#include "tropmirror/tropical/complex.hpp"

namespace tropmirror::tropical {

using Point = std::vector<double>;

// Axis-aligned box.
struct Window {
  Point lo;
  Point hi;

  bool contains(const Point& p) const;
  double diagonal() const;
};

struct HausdorffReport {
  double value = 0;         // max of the two directed distances
  double cloud_to_pi = 0;   // over cloud points inside the window
  double pi_to_cloud = 0;   // over samples of Π inside the window
  std::size_t cloud_in_window = 0;
  std::size_t pi_samples = 0;
  double spacing = 0;
};

// Samples of Π ∩ window at roughly the given spacing. In the plane the
// 1-faces are clipped and sampled along their length; in other dimensions a
// grid of the window is projected onto the top-dimensional faces.
std::vector<Point> sample_complex(const TropicalComplex& pi, const Window& window, double spacing);

double distance_to_complex(const TropicalComplex& pi, const Point& p);

// Windowed symmetric Hausdorff distance. spacing ≤ 0 selects 1e-3 of the
// window diagonal. Throws EmptyWindow when either side has nothing inside.
HausdorffReport hausdorff_distance(const std::vector<Point>& cloud, const TropicalComplex& pi,
                                   const Window& window, double spacing = 0);

}  // namespace tropmirror::tropical
