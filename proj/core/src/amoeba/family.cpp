#include "tropmirror/amoeba/family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tropmirror/error.hpp"

namespace tropmirror::amoeba {

CutoffValue cutoff(double d, const CutoffProfile& p) {
  if (d <= p.inner) return {0.0, 0.0};
  if (d >= p.outer) return {1.0, 0.0};
  const double width = p.outer - p.inner;
  const double x = (d - p.inner) / width;
  return {x * x * (3.0 - 2.0 * x), 6.0 * x * (1.0 - x) / width};
}

TorusPoint TorusPoint::from_z(const std::vector<Complex>& z) {
  TorusPoint p;
  for (const auto& c : z) p.w.push_back(std::log(c));
  return p;
}

std::vector<Complex> TorusPoint::z() const {
  std::vector<Complex> out;
  for (const auto& c : w) out.push_back(std::exp(c));
  return out;
}

std::vector<double> TorusPoint::log_modulus() const {
  std::vector<double> out;
  for (const auto& c : w) out.push_back(c.real());
  return out;
}

PatchworkFamily::PatchworkFamily(const tropical::HeightFunction& h, double log_t, double s, double eps,
                                 std::vector<Complex> coefficients)
    : log_t_(log_t), s_(s), eps_(eps), coefficients_(std::move(coefficients)) {
  if (!(log_t > 0)) throw Error(ErrorCode::InvalidArgument, "t must exceed 1");
  if (!(s >= 0 && s <= 1)) throw Error(ErrorCode::InvalidArgument, "s must lie in [0,1]");
  if (!(eps > 0)) throw Error(ErrorCode::InvalidEps, "eps must be positive");
  if (coefficients_.empty()) coefficients_.assign(h.size(), 1.0);
  if (coefficients_.size() != h.size()) throw Error(ErrorCode::InvalidArgument, "one coefficient per exponent");
  auto pi = std::make_shared<tropical::TropicalComplex>(tropical::tropical_complex(h));
  auto comps = std::make_shared<std::vector<tropical::FloatPolyhedron>>();
  for (std::size_t a = 0; a < h.size(); ++a) comps->push_back(tropical::FloatPolyhedron::component(*pi, a, log_t));
  complex_ = std::move(pi);
  components_ = std::move(comps);
  profile_ = CutoffProfile::for_scale(eps, log_t);
  for (std::size_t a = 0; a < h.size(); ++a) {
    std::vector<double> e;
    for (std::size_t k = 0; k < h.dim(); ++k) e.push_back(h.support[a][k].convert_to<double>());
    exponents_.push_back(std::move(e));
    log_base_.push_back(std::log(std::abs(coefficients_[a])) - to_double(h.heights[a]) * log_t);
  }
}

PatchworkFamily PatchworkFamily::from_fan(const Fan& fan, const SupportFunction& phi, double log_t, double s,
                                          double eps) {
  const auto h = tropical::height_from_bundle(fan, phi);
  std::vector<Complex> c(h.size(), 1.0);
  c[0] = -1.0;
  return PatchworkFamily(h, log_t, s, eps, std::move(c));
}

PatchworkFamily PatchworkFamily::with_s(double s) const {
  if (!(s >= 0 && s <= 1)) throw Error(ErrorCode::InvalidArgument, "s must lie in [0,1]");
  PatchworkFamily f = *this;
  f.s_ = s;
  return f;
}

double PatchworkFamily::distance(std::size_t alpha, const std::vector<double>& u, std::vector<double>* gradient) const {
  const auto& poly = (*components_)[alpha];
  if (gradient) gradient->assign(u.size(), 0.0);
  if (poly.empty()) return std::numeric_limits<double>::infinity();
  const Eigen::VectorXd p = tropical::to_eigen(u);
  const Eigen::VectorXd x = poly.project(p);
  const double d = (p - x).norm();
  if (gradient && d > 0)
    for (std::size_t k = 0; k < u.size(); ++k) (*gradient)[k] = (p[static_cast<Eigen::Index>(k)] - x[static_cast<Eigen::Index>(k)]) / d;
  return d;
}

double PatchworkFamily::phi(std::size_t alpha, const std::vector<double>& u, std::vector<double>* gradient) const {
  // past the outer radius the profile is flat at 1
  if ((*components_)[alpha].distance_lower_bound(tropical::to_eigen(u)) >= profile_.outer) {
    if (gradient) gradient->assign(u.size(), 0.0);
    return 1.0;
  }
  std::vector<double> g;
  const double d = distance(alpha, u, gradient ? &g : nullptr);
  const CutoffValue c = cutoff(d, profile_);
  if (gradient) {
    gradient->assign(u.size(), 0.0);
    if (c.derivative != 0)
      for (std::size_t k = 0; k < u.size(); ++k) (*gradient)[k] = c.derivative * g[k];
  }
  return c.value;
}

double PatchworkFamily::log_magnitude(std::size_t alpha, const std::vector<double>& u) const {
  double m = log_base_[alpha];
  const auto& e = exponents_[alpha];
  for (std::size_t k = 0; k < u.size(); ++k) m += e[k] * u[k];
  return m;
}

double FamilyValue::del_norm() const {
  double s = 0;
  for (const auto& c : del) s += std::norm(c);
  return std::sqrt(s);
}

double FamilyValue::delbar_norm() const {
  double s = 0;
  for (const auto& c : delbar) s += std::norm(c);
  return std::sqrt(s);
}

FamilyValue eval_family(const PatchworkFamily& f, const TorusPoint& z) {
  const std::size_t n = f.dim();
  const std::size_t m = f.size();
  const std::vector<double> u = z.log_modulus();

  FamilyValue out;
  std::vector<double> logs(m);
  for (std::size_t a = 0; a < m; ++a) logs[a] = f.log_magnitude(a, u);
  out.dominant = static_cast<std::size_t>(std::max_element(logs.begin(), logs.end()) - logs.begin());
  out.log_scale = logs[out.dominant];
  out.value = 0;
  out.del.assign(n, 0.0);
  out.delbar.assign(n, 0.0);
  out.terms.resize(m);
  out.phi.assign(m, 0.0);

  std::vector<double> grad(n, 0.0);
  for (std::size_t a = 0; a < m; ++a) {
    // c_α t^{−ν} z^α relative to e^{log_scale}, phase from Im w.
    double phase = std::arg(f.coefficients()[a]);
    for (std::size_t k = 0; k < n; ++k) phase += f.exponent(a)[k] * z.w[k].imag();
    const Complex raw = std::polar(std::exp(logs[a] - out.log_scale), phase);
    const double s = f.s();
    const double ph = s != 0 ? f.phi(a, u, &grad) : 0.0;
    out.phi[a] = ph;
    const double keep = 1.0 - s * ph;
    out.terms[a] = raw * keep;
    out.value += out.terms[a];
    for (std::size_t j = 0; j < n; ++j) {
      const double aj = f.exponent(a)[j];
      const double g = s != 0 ? grad[j] : 0.0;
      out.del[j] += raw * (keep * aj - s * g / 2.0);
      out.delbar[j] += raw * (-s * g / 2.0);
    }
  }
  return out;
}

std::optional<std::size_t> lopsided_certificate(const PatchworkFamily& f, const std::vector<double>& u) {
  const std::size_t m = f.size();
  std::vector<double> logs(m);
  for (std::size_t a = 0; a < m; ++a) logs[a] = f.log_magnitude(a, u);
  const auto best = static_cast<std::size_t>(std::max_element(logs.begin(), logs.end()) - logs.begin());
  double others = 0;
  for (std::size_t a = 0; a < m; ++a)
    if (a != best) others += std::exp(logs[a] - logs[best]);
  const double lead = 1.0 - f.phi(best, u);
  // real fibers put zeros exactly on the amoeba boundary, where the two sides
  // agree to round-off
  if (lead > others * (1 + 1e-12) + 1e-15) return best;
  return std::nullopt;
}

}  // namespace tropmirror::amoeba
