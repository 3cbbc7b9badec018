#include "tropmirror/amoeba/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "tropmirror/error.hpp"
#include "tropmirror/parallel.hpp"

namespace tropmirror::amoeba {
namespace {

struct LogCoefficient {
  long m;
  double log_abs;
  double phase;
};

// Coefficients of f_{t,0} as a Laurent polynomial in z_other, in log form.
std::vector<LogCoefficient> fiber_coefficients(const PatchworkFamily& f, std::size_t axis, Complex w_axis) {
  const auto& h = f.height();
  const std::size_t other = 1 - axis;
  std::map<long, std::vector<std::pair<double, double>>> groups;
  for (std::size_t a = 0; a < f.size(); ++a) {
    const double ak = h.support[a][axis].convert_to<double>();
    const double mag = std::log(std::abs(f.coefficients()[a])) - to_double(h.heights[a]) * f.log_t() + ak * w_axis.real();
    const double ph = std::arg(f.coefficients()[a]) + ak * w_axis.imag();
    groups[h.support[a][other].convert_to<long>()].emplace_back(mag, ph);
  }
  std::vector<LogCoefficient> out;
  for (const auto& [m, terms] : groups) {
    double top = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) top = std::max(top, t.first);
    Complex sum = 0;
    for (const auto& t : terms) sum += std::polar(std::exp(t.first - top), t.second);
    // cancellation below round-off counts as an exact zero
    if (std::abs(sum) < 1e-13) continue;
    out.push_back({m, top + std::log(std::abs(sum)), std::arg(sum)});
  }
  return out;
}

// Initial roots from each edge of the upper Newton polygon of (m, log|C_m|).
std::vector<Complex> tropical_starts(const std::vector<LogCoefficient>& c) {
  std::vector<std::size_t> hull;
  for (std::size_t i = 0; i < c.size(); ++i) {
    while (hull.size() >= 2) {
      const auto& p = c[hull[hull.size() - 2]];
      const auto& q = c[hull.back()];
      const double cross = double(q.m - p.m) * (c[i].log_abs - p.log_abs) - (q.log_abs - p.log_abs) * double(c[i].m - p.m);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<Complex> starts;
  for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
    const auto& lo = c[hull[e]];
    const auto& hi = c[hull[e + 1]];
    const double r = (lo.log_abs - hi.log_abs) / double(hi.m - lo.m);
    const auto deg = static_cast<Eigen::Index>(hi.m - lo.m);
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(deg + 1);
    const double base = lo.log_abs + double(lo.m) * r;
    for (std::size_t i = hull[e]; i <= hull[e + 1]; ++i)
      a[c[i].m - lo.m] = std::polar(std::exp(c[i].log_abs + double(c[i].m) * r - base), c[i].phase);
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(deg, deg);
    for (Eigen::Index k = 0; k < deg; ++k) comp(0, k) = -a[deg - 1 - k] / a[deg];
    for (Eigen::Index k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    for (Eigen::Index k = 0; k < deg; ++k) {
      const Complex y = es.eigenvalues()[k];
      if (std::abs(y) == 0) continue;
      starts.push_back(r + std::log(y));
    }
  }
  return starts;
}

double wrapped_gap(Complex a, Complex b) {
  Complex d = a - b;
  double im = std::remainder(d.imag(), 2 * std::numbers::pi);
  return std::abs(Complex(d.real(), im));
}

TorusPoint point_of(std::size_t axis, Complex w_axis, Complex w_other) {
  TorusPoint p;
  p.w.assign(2, 0.0);
  p.w[axis] = w_axis;
  p.w[1 - axis] = w_other;
  return p;
}

// Real Newton in (Re, Im) of w_other; f need not be holomorphic.
bool newton(const PatchworkFamily& f, std::size_t axis, Complex w_axis, Complex& w, const NewtonOptions& opt) {
  const std::size_t other = 1 - axis;
  const double escape = opt.escape * std::max(1.0, f.log_t());
  std::size_t extra = 0;
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    const FamilyValue v = eval_family(f, point_of(axis, w_axis, w));
    // two more steps past tolerance bring the residual to round-off
    if (v.relative_residual() < opt.tolerance && (extra++ == 2 || v.relative_residual() < 1e-15)) return true;
    const Complex A = v.del[other];
    const Complex B = v.delbar[other];
    const Complex da = A + B;
    const Complex db = Complex(0, 1) * (A - B);
    const double det = da.real() * db.imag() - db.real() * da.imag();
    if (!(std::abs(det) > 1e-300)) return false;
    const double x = (-v.value.real() * db.imag() + db.real() * v.value.imag()) / det;
    const double y = (-da.real() * v.value.imag() + da.imag() * v.value.real()) / det;
    w += Complex(x, y);
    if (!std::isfinite(w.real()) || std::abs(w.real()) > escape) return false;
  }
  return eval_family(f, point_of(axis, w_axis, w)).relative_residual() < opt.tolerance;
}

}  // namespace

std::vector<std::vector<double>> AmoebaCloud::us() const {
  std::vector<std::vector<double>> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.u);
  return out;
}

std::vector<TorusPoint> fiber_roots(const PatchworkFamily& f, std::size_t axis, Complex w_axis, bool* degenerate,
                                    std::size_t* lost, const NewtonOptions& options) {
  if (f.dim() != 2) throw Error(ErrorCode::InvalidArgument, "fiber roots need n = 2");
  const auto coeffs = fiber_coefficients(f, axis, w_axis);
  if (degenerate) *degenerate = coeffs.empty();
  if (lost) *lost = 0;
  const PatchworkFamily f0 = f.with_s(0);
  std::vector<Complex> roots;
  for (Complex w : tropical_starts(coeffs)) {
    if (!newton(f0, axis, w_axis, w, options)) {
      if (lost) ++*lost;
      continue;
    }
    bool fresh = true;
    for (const auto& r : roots) fresh = fresh && wrapped_gap(r, w) > 1e-7 * std::max(1.0, std::abs(w.real()));
    if (fresh) roots.push_back(w);
  }
  std::vector<TorusPoint> out;
  for (Complex w : roots) {
    bool ok = true;
    if (f.s() != 0) {
      for (std::size_t k = 1; k <= options.s_steps && ok; ++k)
        ok = newton(f.with_s(f.s() * double(k) / double(options.s_steps)), axis, w_axis, w, options);
    }
    if (ok) out.push_back(point_of(axis, w_axis, w));
    else if (lost) ++*lost;
  }
  return out;
}

AmoebaCloud amoeba_sample_curve(const PatchworkFamily& f, const SampleGrid& grid, const NewtonOptions& options) {
  if (f.dim() != 2) throw Error(ErrorCode::InvalidArgument, "amoeba sampling needs n = 2");
  if (grid.lo.size() != 2 || grid.hi.size() != 2 || grid.radii == 0 || grid.args == 0)
    throw Error(ErrorCode::InvalidArgument, "sample grid needs a 2D box and positive sizes");
  for (std::size_t k = 0; k < 2; ++k)
    if (!(grid.lo[k] < grid.hi[k])) throw Error(ErrorCode::InvalidArgument, "empty sample box");

  struct Fiber {
    std::vector<AmoebaPoint> points;
    bool degenerate = false;
    std::size_t lost = 0;
    std::size_t roots = 0;
  };
  const std::size_t per_axis = grid.radii * grid.args;
  std::vector<Fiber> fibers(2 * per_axis);
  parallel_for(fibers.size(), [&](std::size_t idx) {
    const std::size_t axis = idx / per_axis;
    const std::size_t i = (idx % per_axis) / grid.args;
    const std::size_t m = idx % grid.args;
    const double span = grid.hi[axis] - grid.lo[axis];
    const double u = grid.radii == 1 ? grid.lo[axis] + span / 2
                                     : grid.lo[axis] + span * double(i) / double(grid.radii - 1);
    const Complex w_axis(u, 2 * std::numbers::pi * double(m) / double(grid.args));
    Fiber& out = fibers[idx];
    const auto roots = fiber_roots(f, axis, w_axis, &out.degenerate, &out.lost, options);
    out.roots = roots.size();
    for (const auto& r : roots) {
      AmoebaPoint p;
      p.u = r.log_modulus();
      if (p.u[1 - axis] < grid.lo[1 - axis] || p.u[1 - axis] > grid.hi[1 - axis]) continue;
      p.residual = eval_family(f, r).relative_residual();
      p.witness = r;
      p.axis = axis;
      out.points.push_back(std::move(p));
    }
  });

  AmoebaCloud cloud;
  cloud.stats.fibers = fibers.size();
  for (auto& fb : fibers) {
    cloud.stats.degenerate_fibers += fb.degenerate ? 1 : 0;
    cloud.stats.lost_paths += fb.lost;
    cloud.stats.roots += fb.roots;
    for (auto& p : fb.points) cloud.points.push_back(std::move(p));
  }
  cloud.stats.emitted = cloud.points.size();
  return cloud;
}

}  // namespace tropmirror::amoeba
