#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "tropmirror/tropical/complex.hpp"
#include "tropmirror/tropical/polyhedron.hpp"

namespace tropmirror::amoeba {

using Complex = std::complex<double>;

// Cubic smoothstep from 0 at `inner` to 1 at `outer`.
struct CutoffProfile {
  double inner = 0;
  double outer = 1;

  static CutoffProfile for_scale(double eps, double log_t) { return {eps * log_t / 2, eps * log_t}; }
};

struct CutoffValue {
  double value;
  double derivative;
};

CutoffValue cutoff(double d, const CutoffProfile& profile);

// A point of (ℂ*)ⁿ stored by its logarithm w, z = exp(w). Re w = Log z.
struct TorusPoint {
  std::vector<Complex> w;

  static TorusPoint from_z(const std::vector<Complex>& z);
  std::vector<Complex> z() const;
  std::vector<double> log_modulus() const;
};

// f_{t,s} = Σ c_α t^{−ν(α)} (1 − s φ_α) z^α with φ_α = profile(d(Log z, C_{α,t})).
class PatchworkFamily {
 public:
  // coefficients default to 1 for every α.
  PatchworkFamily(const tropical::HeightFunction& h, double log_t, double s, double eps,
                  std::vector<Complex> coefficients = {});
  // Mirror potential of a fan: A = {0} ∪ rays, c₀ = −1, other coefficients 1.
  static PatchworkFamily from_fan(const Fan& fan, const SupportFunction& phi, double log_t, double s, double eps);

  PatchworkFamily with_s(double s) const;

  const tropical::HeightFunction& height() const { return complex_->subdivision.height; }
  const tropical::TropicalComplex& complex() const { return *complex_; }
  std::size_t dim() const { return height().dim(); }
  std::size_t size() const { return height().size(); }
  double log_t() const { return log_t_; }
  double s() const { return s_; }
  double eps() const { return eps_; }
  const CutoffProfile& profile() const { return profile_; }
  const std::vector<Complex>& coefficients() const { return coefficients_; }

  // Distance from u to C_{α,t} (+∞ for an empty component) and its gradient.
  double distance(std::size_t alpha, const std::vector<double>& u, std::vector<double>* gradient = nullptr) const;
  // φ_α(u) and ∂φ_α/∂u.
  double phi(std::size_t alpha, const std::vector<double>& u, std::vector<double>* gradient = nullptr) const;
  // log |c_α t^{−ν(α)} z^α| at Log z = u.
  double log_magnitude(std::size_t alpha, const std::vector<double>& u) const;
  // α as doubles.
  const std::vector<double>& exponent(std::size_t alpha) const { return exponents_[alpha]; }

 private:
  std::shared_ptr<const tropical::TropicalComplex> complex_;
  std::shared_ptr<const std::vector<tropical::FloatPolyhedron>> components_;
  double log_t_ = 1;
  double s_ = 0;
  double eps_ = 0.1;
  CutoffProfile profile_;
  std::vector<Complex> coefficients_;
  std::vector<std::vector<double>> exponents_;
  std::vector<double> log_base_;  // log|c_α| − ν(α) log t
};

// Values are stored relative to e^{log_scale}, the largest |c_α t^{−ν(α)} z^α|,
// so nothing overflows at large t. del_j = z_j ∂f/∂z_j and delbar_j =
// z̄_j ∂f/∂z̄_j: their Euclidean norms are the covector norms in the metric
// with |dz_j| = |z_j|.
struct FamilyValue {
  double log_scale = 0;
  Complex value;
  std::vector<Complex> del;
  std::vector<Complex> delbar;
  std::vector<Complex> terms;  // c_α t^{−ν} z^α (1 − s φ_α), scaled
  std::vector<double> phi;   // left at 0 when s = 0
  std::size_t dominant = 0;    // argmax of the raw term magnitudes

  double relative_residual() const { return std::abs(value); }
  double del_norm() const;
  double delbar_norm() const;
};

FamilyValue eval_family(const PatchworkFamily& f, const TorusPoint& z);

// α with |c_α t^{−ν(α)} e^{⟨α,u⟩}|(1 − φ_α(u)) > Σ_{β≠α} |c_β t^{−ν(β)} e^{⟨β,u⟩}|,
// which rules u out of the amoeba of f_{t,s} for every s ∈ [0,1]. A relative
// slack of 1e-12 absorbs round-off at boundary points.
std::optional<std::size_t> lopsided_certificate(const PatchworkFamily& f, const std::vector<double>& u);

}  // namespace tropmirror::amoeba
