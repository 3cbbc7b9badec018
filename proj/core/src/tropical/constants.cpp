#include "tropmirror/tropical/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "tropmirror/error.hpp"
#include "tropmirror/tropical/polyhedron.hpp"

namespace tropmirror::tropical {
namespace {

Eigen::VectorXd vec(const RationalVector& v) { return to_eigen(to_doubles(v)); }
Eigen::VectorXd vec(const LatticeVector& v) { return to_eigen(to_doubles(v)); }

double rho_of(const CoherentSubdivision& sub) {
  const auto& h = sub.height;
  const auto n = static_cast<Eigen::Index>(h.dim());
  double rho = 1.0;
  for (const auto& cell : sub.cells) {
    // Columns v_i − v_base with the lowest-index vertex as base.
    Eigen::MatrixXd m(n, n);
    for (Eigen::Index k = 0; k < n; ++k)
      m.col(k) = vec(h.support[cell.vertices[static_cast<std::size_t>(k) + 1]] - h.support[cell.vertices[0]]);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    rho = std::max({rho, s[0], 1.0 / s[n - 1]});
  }
  return rho;
}

// Random point of conv(vertices) + cone(rays), rays scaled up to `reach`.
Eigen::VectorXd random_point(std::mt19937_64& rng, const std::vector<Eigen::VectorXd>& vertices,
                             const std::vector<Eigen::VectorXd>& rays, double reach) {
  std::exponential_distribution<double> ex(1.0);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  Eigen::VectorXd p = Eigen::VectorXd::Zero(vertices.front().size());
  double total = 0;
  std::vector<double> w(vertices.size());
  for (auto& x : w) total += (x = ex(rng));
  for (std::size_t i = 0; i < vertices.size(); ++i) p += (w[i] / total) * vertices[i];
  for (const auto& r : rays) p += uni(rng) * reach * r.normalized();
  return p;
}

}  // namespace

TropicalConstants tropical_constants(const HeightFunction& h, const ConstantsOptions& options) {
  return tropical_constants(tropical_complex(h), options);
}

TropicalConstants tropical_constants(const TropicalComplex& pi, const ConstantsOptions& options) {
  const auto& sub = pi.subdivision;
  const auto& h = sub.height;
  if (!sub.triangulation) throw Error(ErrorCode::NotTriangulation, "constants need a triangulation");
  const std::size_t n = h.dim();

  TropicalConstants k;
  k.cardA = h.size();
  k.N = 0;
  for (const auto& a : h.support) k.N = std::max(k.N, l1_norm(a));
  for (const auto& f : sub.faces)
    if (f.dim == 1) k.N = std::max(k.N, l1_norm(h.support[f.vertices[0]] - h.support[f.vertices[1]]));
  k.rho = rho_of(sub);

  // Diameter of the bounded part of Π.
  std::vector<Eigen::VectorXd> pi_vertices;
  for (const auto& g : sub.affine) pi_vertices.push_back(vec(g.gradient));
  double diam = 0;
  for (const auto& a : pi_vertices)
    for (const auto& b : pi_vertices) diam = std::max(diam, (a - b).norm());
  if (diam == 0) diam = 1;
  const double offset = options.offset_fraction * diam;

  std::mt19937_64 rng(options.seed);
  double min_ratio = std::numeric_limits<double>::infinity();

  for (const auto& face : pi.faces) {
    if (face.dim + 1 != n) continue;
    const Cell& edge = sub.faces[face.dual];
    for (int orient = 0; orient < 2; ++orient) {
      const std::size_t alpha = edge.vertices[orient];
      const std::size_t beta = edge.vertices[1 - orient];
      const FloatPolyhedron ca = FloatPolyhedron::component(pi, alpha);
      const Eigen::VectorXd normal = vec(h.support[alpha] - h.support[beta]);
      const double level = to_double(h.heights[alpha] - h.heights[beta]);
      auto ratio = [&](const Eigen::VectorXd& p) {
        const double dc = ca.distance(p);
        if (!(dc > 1e-12 * diam)) return;
        const double dh = std::abs(normal.dot(p) - level) / normal.norm();
        min_ratio = std::min(min_ratio, dh / dc);
      };

      // C_β geometry: its Π-vertices and recession generators.
      std::vector<Eigen::VectorXd> cb_vertices, cb_rays;
      for (std::size_t c = 0; c < sub.cells.size(); ++c)
        if (std::binary_search(sub.cells[c].points.begin(), sub.cells[c].points.end(), beta))
          cb_vertices.push_back(vec(sub.affine[c].gradient));
      for (const auto& hs : sub.newton.hrep())
        if (dot(hs.normal, to_rational(h.support[beta])) == hs.bound) cb_rays.push_back(vec(hs.normal));

      std::size_t taken = 0;
      // Structural samples: leave each Π-vertex of the face along the edges
      // of C_β through it.
      for (const auto& v : face.vertices) {
        const Eigen::VectorXd vv = vec(v);
        for (const auto& e : pi.faces) {
          if (e.dim != 1) continue;
          const auto& dual = sub.faces[e.dual].points;
          if (!std::binary_search(dual.begin(), dual.end(), beta)) continue;
          if (std::find(e.vertices.begin(), e.vertices.end(), v) == e.vertices.end()) continue;
          Eigen::VectorXd dir;
          if (e.vertices.size() == 2)
            dir = vec(e.vertices[0] == v ? e.vertices[1] : e.vertices[0]) - vv;
          else
            dir = vec(e.recession.front());
          ratio(vv + offset * dir.normalized());
          ++taken;
        }
      }
      if (n == 1) {
        for (const auto& v : cb_vertices)
          for (const auto& r : cb_rays) ratio(v + offset * r.normalized());
      }

      std::vector<Eigen::VectorXd> f_vertices, f_rays;
      for (const auto& v : face.vertices) f_vertices.push_back(vec(v));
      for (const auto& r : face.recession) f_rays.push_back(vec(r));
      // Rays of a face are generated by sums of the facet normals it touches.
      if (!f_rays.empty()) {
        Eigen::VectorXd s = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
        for (const auto& r : f_rays) s += r.normalized();
        f_rays = {s};
      }
      for (; taken < options.samples_per_pair; ++taken) {
        const Eigen::VectorXd q = random_point(rng, f_vertices, f_rays, diam);
        const Eigen::VectorXd r = random_point(rng, cb_vertices, cb_rays, diam);
        const Eigen::VectorXd d = r - q;
        if (d.norm() < 1e-9 * diam) continue;
        ratio(q + offset * d.normalized());
      }
    }
  }
  if (!std::isfinite(min_ratio)) throw Error(ErrorCode::DegenerateSupport, "no boundary samples for the separation constant");
  k.c_est = 0.5 * min_ratio;
  return k;
}

ScaleCheck scale_inequalities(const TropicalConstants& k, double eps, double log_t) {
  const double a = static_cast<double>(k.cardA);
  const double n_const = k.N.convert_to<double>();
  const double decay = std::exp(-k.c_est * eps * log_t);
  ScaleCheck s;
  s.lhs2 = decay / (eps * log_t);
  s.rhs2 = 1.0 / (40.0 * a * k.rho);
  s.lhs3 = decay;
  s.rhs3 = 1.0 / (5.0 * a * a * k.rho * n_const);
  return s;
}

double choose_log_scale(const TropicalConstants& k, double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidEps, "eps must be positive");
  if (!(k.c_est > 0)) throw Error(ErrorCode::InvalidArgument, "separation constant must be positive");
  double lo = 0, hi = 1;
  while (!scale_inequalities(k, eps, hi).holds()) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (scale_inequalities(k, eps, mid).holds() ? hi : lo) = mid;
  }
  if (!scale_inequalities(k, eps, hi).holds())
    throw Error(ErrorCode::InvalidArgument, "scale inequalities fail at the bisection bound");
  return hi;
}

double choose_scale(const TropicalConstants& k, double eps) { return std::exp(choose_log_scale(k, eps)); }

}  // namespace tropmirror::tropical
