#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropmirror/amoeba/family.hpp"

namespace tropmirror::amoeba {

// |∂f|_g − |∂̄f|_g at a zero, relative to the largest monomial. Throws
// NotOnZeroLocus when the relative residual is 1e-8 or more.
double symplectic_margin(const PatchworkFamily& f, const TorusPoint& z);

// log |t^{−ν(α)}z^α / t^{−ν(β)}z^β| at Log z = u.
double log_ratio(const PatchworkFamily& f, std::size_t alpha, std::size_t beta, const std::vector<double>& u);

struct DecayReport {
  std::size_t samples = 0;
  std::size_t checked = 0;  // (p, α) pairs with φ_α(p) ≠ 0
  std::size_t skipped = 0;  // pairs with φ_α(p) = 0
  std::size_t violations = 0;
  double worst_slack = 0;   // max of log ratio − bound over checked pairs
};

// Samples p ∈ C_{β,t} (uniform in a box around Π_t and at log-uniform offsets
// from its vertices) and compares every α with φ_α(p) ≠ 0 against
// e^{−c ε log t ‖α−β‖₂}.
DecayReport exponential_decay_check(const PatchworkFamily& f, double c_est, std::size_t samples,
                                    std::uint64_t seed = 1);

struct SphereRay {
  double angle = 0;
  bool crossing = false;
  std::vector<double> u;  // first sign change of the real restriction
};

struct SphereSample {
  std::vector<SphereRay> rays;
  std::size_t missing = 0;  // rays with no crossing in the window
  std::vector<std::vector<double>> curve() const;
};

// n = 2. Real restriction t ↦ f_{t,s}(e^{r cos θ}, e^{r sin θ}) on `samples`
// equally spaced angles, scanned outward to r_max (default 4 log t · max |q|
// over the vertices q of Q) and refined by bisection.
SphereSample boundary_sphere_sample(const PatchworkFamily& f, std::size_t samples, double r_max = 0);

// Total turning of the closed polygon about the origin, in turns.
int winding_number(const std::vector<std::vector<double>>& curve);

}  // namespace tropmirror::amoeba
