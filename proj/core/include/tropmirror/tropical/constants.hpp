#pragma once

#include <cstddef>
#include <cstdint>

#include "tropmirror/tropical/complex.hpp"

namespace tropmirror::tropical {

struct TropicalConstants {
  Integer N;           // max ℓ¹ norm over subdivision edges and over A
  double rho = 1.0;    // simplex length-distortion bound
  double c_est = 0.0;  // separation constant estimate
  std::size_t cardA = 0;
};

struct ConstantsOptions {
  std::size_t samples_per_pair = 256;
  double offset_fraction = 1e-3;  // ε' as a fraction of the bounded part's diameter
  std::uint64_t seed = 1;
};

// Throws NotTriangulation unless the subdivision is a triangulation.
TropicalConstants tropical_constants(const TropicalComplex& pi, const ConstantsOptions& options = {});
TropicalConstants tropical_constants(const HeightFunction& h, const ConstantsOptions& options = {});

// Sides of the two scale inequalities at log t = L.
struct ScaleCheck {
  double lhs2 = 0, rhs2 = 0;  // e^{−cεL}/(εL) < 1/(40|A|ρ)
  double lhs3 = 0, rhs3 = 0;  // e^{−cεL} < 1/(5|A|²ρN)
  bool holds() const { return lhs2 < rhs2 && lhs3 < rhs3; }
};
ScaleCheck scale_inequalities(const TropicalConstants& k, double eps, double log_t);

// Smallest log t (relative tolerance 1e-6) at which both inequalities hold.
// Throws InvalidEps for eps ≤ 0.
double choose_log_scale(const TropicalConstants& k, double eps);
// exp(choose_log_scale); may be +∞ when log t exceeds the double range.
double choose_scale(const TropicalConstants& k, double eps);

}  // namespace tropmirror::tropical
