#pragma once

#include <complex>
#include <vector>

#include "tropmirror/amoeba/laurent.hpp"

namespace tropmirror::amoeba {

// v = Σ c_j ∂/∂z_j + c.c. at base point z; c_j = dx_j(v) + i dy_j(v).
struct TangentVectorC {
  std::vector<Complex> base;
  std::vector<Complex> components;
  // |v|² = Σ |c_j|² / |z_j|².
  double norm() const;
};

// ω = Σ dx_j ∧ dy_j / |z_j|² evaluated on two real tangent vectors at z.
double omega(const std::vector<Complex>& z, const std::vector<Complex>& v, const std::vector<Complex>& w);

// f_*(v) = Σ ∂_j f · c_j.
Complex pushforward(const LaurentPolynomial& f, const TangentVectorC& v);

// Horizontal lift of a ∈ T_{f(z)}ℂ: (2i / ω(f*dz, f*dz̄)) ω_#(f* ω₀^# a).
// Throws CriticalPoint when |∂f|_g < 1e-12.
TangentVectorC horizontal_lift(const LaurentPolynomial& f, const std::vector<Complex>& z, Complex a);

}  // namespace tropmirror::amoeba
