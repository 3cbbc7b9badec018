#include "tropmirror/amoeba/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "tropmirror/error.hpp"

namespace tropmirror::amoeba {

double symplectic_margin(const PatchworkFamily& f, const TorusPoint& z) {
  const FamilyValue v = eval_family(f, z);
  if (!(v.relative_residual() < 1e-8))
    throw Error(ErrorCode::NotOnZeroLocus, "relative residual " + std::to_string(v.relative_residual()));
  return v.del_norm() - v.delbar_norm();
}

double log_ratio(const PatchworkFamily& f, std::size_t alpha, std::size_t beta, const std::vector<double>& u) {
  const auto& c = f.coefficients();
  return (f.log_magnitude(alpha, u) - std::log(std::abs(c[alpha]))) -
         (f.log_magnitude(beta, u) - std::log(std::abs(c[beta])));
}

DecayReport exponential_decay_check(const PatchworkFamily& f, double c_est, std::size_t samples,
                                    std::uint64_t seed) {
  const std::size_t n = f.dim();
  const double L = f.log_t();
  const auto& prof = f.profile();
  const auto& h = f.height();

  std::vector<std::vector<double>> vertices;
  for (const auto& face : f.complex().faces) {
    if (face.dim != 0) continue;
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = to_double(face.interior_point[k]) * L;
    vertices.push_back(std::move(v));
  }
  std::vector<double> lo(n, -L), hi(n, L);
  for (const auto& v : vertices)
    for (std::size_t k = 0; k < n; ++k) {
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  for (std::size_t k = 0; k < n; ++k) {
    lo[k] -= 3 * prof.outer;
    hi[k] += 3 * prof.outer;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);
  DecayReport report;
  report.worst_slack = -std::numeric_limits<double>::infinity();
  std::vector<double> u(n);
  for (std::size_t i = 0; i < samples; ++i) {
    if (vertices.empty() || unit(rng) < 0.5) {
      for (std::size_t k = 0; k < n; ++k) u[k] = lo[k] + (hi[k] - lo[k]) * unit(rng);
    } else {
      const auto& v = vertices[std::min(vertices.size() - 1, std::size_t(unit(rng) * double(vertices.size())))];
      double norm = 0;
      std::vector<double> dir(n);
      for (auto& d : dir) {
        d = gauss(rng);
        norm += d * d;
      }
      norm = std::sqrt(norm);
      const double radius = std::exp(std::log(prof.inner) + unit(rng) * std::log(10 * prof.outer / prof.inner));
      for (std::size_t k = 0; k < n; ++k) u[k] = v[k] + radius * dir[k] / norm;
    }
    ++report.samples;
    std::size_t beta = 0;
    for (std::size_t a = 1; a < f.size(); ++a)
      if (log_ratio(f, a, beta, u) > 0) beta = a;
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (a == beta) continue;
      if (f.phi(a, u) == 0) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      double gap = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const double d = (h.support[a][k] - h.support[beta][k]).convert_to<double>();
        gap += d * d;
      }
      const double slack = log_ratio(f, a, beta, u) + c_est * f.eps() * L * std::sqrt(gap);
      report.worst_slack = std::max(report.worst_slack, slack);
      if (slack >= 0) ++report.violations;
    }
  }
  return report;
}

std::vector<std::vector<double>> SphereSample::curve() const {
  std::vector<std::vector<double>> out;
  for (const auto& r : rays)
    if (r.crossing) out.push_back(r.u);
  return out;
}

SphereSample boundary_sphere_sample(const PatchworkFamily& f, std::size_t samples, double r_max) {
  if (f.dim() != 2) throw Error(ErrorCode::InvalidArgument, "boundary sphere sampling needs n = 2");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "need at least one ray");
  if (r_max <= 0) {
    if (!f.complex().moment_polytope) throw Error(ErrorCode::InvalidArgument, "family has no moment polytope");
    double q = 0;
    for (const auto& v : f.complex().moment_polytope->vertices()) q = std::max(q, std::hypot(to_double(v[0]), to_double(v[1])));
    r_max = 4 * f.log_t() * std::max(q, 1.0);
  }
  const std::size_t steps = 4000;
  auto value = [&](double theta, double r) {
    TorusPoint p;
    p.w = {Complex(r * std::cos(theta), 0.0), Complex(r * std::sin(theta), 0.0)};
    return eval_family(f, p).value.real();
  };

  SphereSample out;
  for (std::size_t k = 0; k < samples; ++k) {
    SphereRay ray;
    ray.angle = 2 * std::numbers::pi * double(k) / double(samples);
    double a = 0;
    double fa = value(ray.angle, a);
    for (std::size_t i = 1; i <= steps; ++i) {
      double b = r_max * double(i) / double(steps);
      const double fb = value(ray.angle, b);
      if ((fa < 0) != (fb < 0)) {
        for (int it = 0; it < 80; ++it) {
          const double m = (a + b) / 2;
          const double fm = value(ray.angle, m);
          if ((fa < 0) != (fm < 0)) b = m;
          else {
            a = m;
            fa = fm;
          }
        }
        const double r = (a + b) / 2;
        ray.crossing = true;
        ray.u = {r * std::cos(ray.angle), r * std::sin(ray.angle)};
        break;
      }
      a = b;
      fa = fb;
    }
    if (!ray.crossing) ++out.missing;
    out.rays.push_back(std::move(ray));
  }
  return out;
}

int winding_number(const std::vector<std::vector<double>>& curve) {
  double total = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& p = curve[i];
    const auto& q = curve[(i + 1) % curve.size()];
    total += std::remainder(std::atan2(q[1], q[0]) - std::atan2(p[1], p[0]), 2 * std::numbers::pi);
  }
  return static_cast<int>(std::lround(total / (2 * std::numbers::pi)));
}

}  // namespace tropmirror::amoeba
