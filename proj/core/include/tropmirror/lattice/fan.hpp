#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tropmirror/lattice/polytope.hpp"

namespace tropmirror {

using Cone = std::vector<std::size_t>;

class Fan {
 public:
  // Throws MalformedFan on empty input, mixed dimensions, zero or
  // non-primitive rays, and out-of-range or repeated cone indices.
  Fan(std::vector<LatticeVector> rays, std::vector<Cone> max_cones);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& max_cones() const noexcept { return max_cones_; }

  // Same fan after y ↦ g·y on every ray.
  Fan transformed(const std::vector<LatticeVector>& matrix_rows) const;

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> max_cones_;
};

struct SupportFunction {
  std::vector<Rational> values;  // one per ray
};

bool is_smooth(const Fan& fan);

// Exact wall check plus sampled integer directions in [-5,5]ⁿ. Supported for
// n ≤ 3; larger n throws InvalidArgument.
bool is_complete(const Fan& fan);

// Throws NotConvex naming the offending cone pair. With strict = false only
// a violation of (weak) convexity is an error.
void check_convex(const Fan& fan, const SupportFunction& phi, bool strict = true);

// Q = {y : ⟨v_i, y⟩ ≤ φ(v_i)}. Convex but not strictly convex φ (e.g. φ ≡ 0)
// is accepted with a warning; the result is then flagged lower-dimensional or
// has fewer facets than rays.
Polytope polytope_from_bundle(const Fan& fan, const SupportFunction& phi);

std::string cone_label(const Cone& cone);

}  // namespace tropmirror
