#pragma once

#include <cstddef>
#include <vector>

#include "tropmirror/lattice/fan.hpp"

namespace tropmirror::tropical {

// ν : A → ℚ on a finite support A ⊂ ℤⁿ.
struct HeightFunction {
  std::vector<LatticeVector> support;
  std::vector<Rational> heights;

  std::size_t dim() const { return support.front().dim(); }
  std::size_t size() const { return support.size(); }
  // Index of α in the support, or size() when absent.
  std::size_t index_of(const LatticeVector& alpha) const;
};

// Throws MalformedInput on fewer than 2 points, mismatched lengths, repeated
// exponents or mixed dimensions.
void validate(const HeightFunction& h);

// A = {0} ∪ rays with ν(0) = 0 and ν(v_i) = φ(v_i). Index 0 is the origin,
// index i + 1 is ray i.
HeightFunction height_from_bundle(const Fan& fan, const SupportFunction& phi);

struct LegendreValue {
  Rational value;
  std::vector<std::size_t> argmax;  // full tie set, ascending indices into A
};

// L_ν(u) = max_α (⟨α, u⟩ − ν(α)).
LegendreValue legendre_value(const HeightFunction& h, const RationalVector& u);

// Floating evaluation of ⟨α, u⟩ − ν(α)·scale for every α (scale = log t).
std::vector<double> legendre_terms(const HeightFunction& h, const std::vector<double>& u, double scale = 1.0);

}  // namespace tropmirror::tropical
