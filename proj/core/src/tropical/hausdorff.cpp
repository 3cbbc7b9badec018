#include "tropmirror/tropical/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "tropmirror/error.hpp"
#include "tropmirror/parallel.hpp"
#include "tropmirror/tropical/polyhedron.hpp"

namespace tropmirror::tropical {
namespace {

std::vector<FloatPolyhedron> top_faces(const TropicalComplex& pi) {
  std::vector<FloatPolyhedron> out;
  for (const auto& f : pi.faces)
    if (f.dim + 1 == pi.dim()) out.push_back(FloatPolyhedron::face(f, pi.dim()));
  return out;
}

// Clip p + s·d, s ∈ [s0, s1], to the window (Liang–Barsky).
bool clip(const Point& p, const Point& d, const Window& w, double& s0, double& s1) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (d[i] == 0) {
      if (p[i] < w.lo[i] || p[i] > w.hi[i]) return false;
      continue;
    }
    double a = (w.lo[i] - p[i]) / d[i], b = (w.hi[i] - p[i]) / d[i];
    if (a > b) std::swap(a, b);
    s0 = std::max(s0, a);
    s1 = std::min(s1, b);
  }
  return s0 <= s1;
}

// Uniform bucket grid for nearest-neighbour queries.
class BucketGrid {
 public:
  BucketGrid(const std::vector<Point>& pts, double cell) : pts_(pts), cell_(cell) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const auto key = key_of(pts[i]);
      buckets_[key].push_back(i);
      if (i == 0) {
        lo_ = hi_ = key;
      } else {
        for (std::size_t k = 0; k < key.size(); ++k) {
          lo_[k] = std::min(lo_[k], key[k]);
          hi_[k] = std::max(hi_[k], key[k]);
        }
      }
    }
  }

  double nearest(const Point& q) const {
    const auto c = key_of(q);
    long max_r = 0;
    for (std::size_t k = 0; k < c.size(); ++k) max_r = std::max({max_r, std::abs(c[k] - lo_[k]), std::abs(c[k] - hi_[k])});
    double best = std::numeric_limits<double>::infinity();
    for (long r = 0; r <= max_r; ++r) {
      if (best <= (static_cast<double>(r) - 1) * cell_) break;
      visit_shell(c, r, [&](const std::vector<long>& key) {
        const auto it = buckets_.find(key);
        if (it == buckets_.end()) return;
        for (auto i : it->second) {
          double s = 0;
          for (std::size_t k = 0; k < q.size(); ++k) s += (pts_[i][k] - q[k]) * (pts_[i][k] - q[k]);
          best = std::min(best, std::sqrt(s));
        }
      });
    }
    return best;
  }

 private:
  std::vector<long> key_of(const Point& p) const {
    std::vector<long> k(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) k[i] = static_cast<long>(std::floor(p[i] / cell_));
    return k;
  }

  template <class F>
  static void visit_shell(const std::vector<long>& c, long r, F&& f) {
    std::vector<long> off(c.size(), -r);
    while (true) {
      long m = 0;
      for (auto o : off) m = std::max(m, std::abs(o));
      if (m == r) {
        std::vector<long> key(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) key[k] = c[k] + off[k];
        f(key);
      }
      std::size_t i = off.size();
      while (i > 0) {
        --i;
        if (off[i] < r) {
          ++off[i];
          break;
        }
        off[i] = -r;
        if (i == 0) return;
      }
    }
  }

  const std::vector<Point>& pts_;
  double cell_;
  std::map<std::vector<long>, std::vector<std::size_t>> buckets_;
  std::vector<long> lo_, hi_;
};

}  // namespace

bool Window::contains(const Point& p) const {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

double Window::diagonal() const {
  double s = 0;
  for (std::size_t i = 0; i < lo.size(); ++i) s += (hi[i] - lo[i]) * (hi[i] - lo[i]);
  return std::sqrt(s);
}

std::vector<Point> sample_complex(const TropicalComplex& pi, const Window& window, double spacing) {
  const std::size_t n = pi.dim();
  std::vector<Point> out;
  if (n == 1) {
    for (const auto& f : pi.faces)
      if (f.dim == 0) {
        Point p = to_doubles(f.vertices.front());
        if (window.contains(p)) out.push_back(p);
      }
    return out;
  }
  if (n == 2) {
    for (const auto& f : pi.faces) {
      if (f.dim != 1) continue;
      const Point a = to_doubles(f.vertices.front());
      Point d(2);
      double s1;
      if (f.vertices.size() == 2) {
        const Point b = to_doubles(f.vertices[1]);
        d = {b[0] - a[0], b[1] - a[1]};
        s1 = 1;
      } else {
        d = to_doubles(f.recession.front());
        s1 = std::numeric_limits<double>::infinity();
      }
      double s0 = 0;
      if (!clip(a, d, window, s0, s1)) continue;
      const double len = std::hypot(d[0], d[1]) * (s1 - s0);
      const auto steps = static_cast<std::size_t>(std::ceil(len / spacing));
      for (std::size_t i = 0; i <= steps; ++i) {
        const double s = s0 + (s1 - s0) * (steps ? static_cast<double>(i) / static_cast<double>(steps) : 0.0);
        out.push_back({a[0] + s * d[0], a[1] + s * d[1]});
      }
    }
    return out;
  }
  // Project a window grid onto the top faces; keep projections that land
  // inside the window and near their grid point.
  const auto faces = top_faces(pi);
  std::vector<std::size_t> counts(n);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    counts[i] = static_cast<std::size_t>(std::ceil((window.hi[i] - window.lo[i]) / spacing)) + 1;
    total *= counts[i];
  }
  std::vector<std::vector<Point>> slots(total);
  parallel_for(total, [&](std::size_t idx) {
    Eigen::VectorXd g(static_cast<Eigen::Index>(n));
    std::size_t r = idx;
    for (std::size_t i = n; i-- > 0;) {
      g[static_cast<Eigen::Index>(i)] = window.lo[i] + static_cast<double>(r % counts[i]) * spacing;
      r /= counts[i];
    }
    for (const auto& f : faces) {
      const Eigen::VectorXd x = f.project(g);
      if (x.size() == 0 || (x - g).norm() > spacing * std::sqrt(static_cast<double>(n))) continue;
      Point p(x.data(), x.data() + x.size());
      if (window.contains(p)) slots[idx].push_back(std::move(p));
    }
  });
  for (auto& s : slots)
    for (auto& p : s) out.push_back(std::move(p));
  return out;
}

double distance_to_complex(const TropicalComplex& pi, const Point& p) {
  double best = std::numeric_limits<double>::infinity();
  const Eigen::VectorXd q = to_eigen(p);
  for (const auto& f : top_faces(pi)) best = std::min(best, f.distance(q));
  return best;
}

HausdorffReport hausdorff_distance(const std::vector<Point>& cloud, const TropicalComplex& pi, const Window& window,
                                   double spacing) {
  HausdorffReport rep;
  rep.spacing = spacing > 0 ? spacing : 1e-3 * window.diagonal();
  const auto faces = top_faces(pi);

  std::vector<Point> inside;
  for (const auto& p : cloud)
    if (window.contains(p)) inside.push_back(p);
  rep.cloud_in_window = inside.size();
  const auto samples = sample_complex(pi, window, rep.spacing);
  rep.pi_samples = samples.size();
  if (inside.empty() || samples.empty())
    throw Error(ErrorCode::EmptyWindow, "window holds " + std::to_string(inside.size()) + " cloud points and " +
                                            std::to_string(samples.size()) + " samples of the tropical hypersurface");

  std::vector<double> d1(inside.size());
  parallel_for(inside.size(), [&](std::size_t i) {
    const Eigen::VectorXd q = to_eigen(inside[i]);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& f : faces) best = std::min(best, f.distance(q));
    d1[i] = best;
  });
  rep.cloud_to_pi = *std::max_element(d1.begin(), d1.end());

  const BucketGrid grid(cloud, std::max(rep.spacing * 16, 1e-12));
  std::vector<double> d2(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) { d2[i] = grid.nearest(samples[i]); });
  rep.pi_to_cloud = *std::max_element(d2.begin(), d2.end());
  rep.value = std::max(rep.cloud_to_pi, rep.pi_to_cloud);
  return rep;
}

}  // namespace tropmirror::tropical
