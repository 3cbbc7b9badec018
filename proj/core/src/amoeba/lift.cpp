#include "tropmirror/amoeba/lift.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "tropmirror/error.hpp"

namespace tropmirror::amoeba {

double TangentVectorC::norm() const {
  double s = 0;
  for (std::size_t j = 0; j < components.size(); ++j) s += std::norm(components[j]) / std::norm(base[j]);
  return std::sqrt(s);
}

double omega(const std::vector<Complex>& z, const std::vector<Complex>& v, const std::vector<Complex>& w) {
  double s = 0;
  for (std::size_t j = 0; j < z.size(); ++j)
    s += (v[j].real() * w[j].imag() - v[j].imag() * w[j].real()) / std::norm(z[j]);
  return s;
}

Complex pushforward(const LaurentPolynomial& f, const TangentVectorC& v) {
  const auto g = f.gradient(v.base);
  Complex s = 0;
  for (std::size_t j = 0; j < g.size(); ++j) s += g[j] * v.components[j];
  return s;
}

TangentVectorC horizontal_lift(const LaurentPolynomial& f, const std::vector<Complex>& z, Complex a) {
  const std::size_t n = z.size();
  if (n != f.dim()) throw Error(ErrorCode::InvalidArgument, "base point dimension");
  const auto g = f.gradient(z);
  double gnorm = 0;
  for (std::size_t j = 0; j < n; ++j) gnorm += std::norm(g[j]) * std::norm(z[j]);
  if (!(std::sqrt(gnorm) >= 1e-12)) throw Error(ErrorCode::CriticalPoint, "df vanishes at the base point");

  const auto N = static_cast<Eigen::Index>(2 * n);
  Eigen::MatrixXd jac(2, N);
  Eigen::MatrixXd omega_inv_t = Eigen::MatrixXd::Zero(N, N);  // Ω^{-T}
  Eigen::VectorXcd dz(N);                                    // f*dz
  for (std::size_t j = 0; j < n; ++j) {
    const auto x = static_cast<Eigen::Index>(2 * j);
    jac(0, x) = g[j].real();
    jac(0, x + 1) = -g[j].imag();
    jac(1, x) = g[j].imag();
    jac(1, x + 1) = g[j].real();
    const double r2 = std::norm(z[j]);
    omega_inv_t(x, x + 1) = r2;
    omega_inv_t(x + 1, x) = -r2;
    dz[x] = g[j];
    dz[x + 1] = Complex(0, 1) * g[j];
  }
  Eigen::Matrix2d omega0;
  omega0 << 0, 1, -1, 0;
  const Eigen::Vector2d av(a.real(), a.imag());
  const Eigen::VectorXd raw = omega_inv_t * (jac.transpose() * (omega0.transpose() * av));
  // dual form ω*(ξ, η) = −ξᵀ Ω^{-T} η
  const Complex pairing = -(dz.transpose() * omega_inv_t.cast<Complex>() * dz.conjugate())(0, 0);
  const double scale = (Complex(0, 2) / pairing).real();

  TangentVectorC v;
  v.base = z;
  v.components.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto x = static_cast<Eigen::Index>(2 * j);
    v.components[j] = scale * Complex(raw[x], raw[x + 1]);
  }
  return v;
}

}  // namespace tropmirror::amoeba
