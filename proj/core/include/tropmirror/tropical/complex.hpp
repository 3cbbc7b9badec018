#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropmirror/lattice/polytope.hpp"
#include "tropmirror/tropical/subdivision.hpp"

namespace tropmirror::tropical {

// k-face of Π, dual to an (n−k)-cell of the subdivision.
struct TropicalFace {
  std::size_t dim = 0;
  std::size_t dual = 0;  // index into CoherentSubdivision::faces
  std::vector<Halfspace> equalities;    // ⟨normal, u⟩ = bound
  std::vector<Halfspace> inequalities;  // ⟨normal, u⟩ ≤ bound
  std::vector<RationalVector> vertices;   // vertices of Π on this face
  std::vector<LatticeVector> recession;   // generators of the recession cone
  bool bounded = true;
  RationalVector interior_point;
};

// Closure of the region where α is the unique maximizer of the Legendre terms.
struct Component {
  std::size_t alpha = 0;
  bool empty = true;
  std::vector<Halfspace> inequalities;  // all of ⟨β − α, u⟩ ≤ ν(β) − ν(α)
  std::vector<std::size_t> neighbours;  // β sharing a facet with C_α
};

struct TropicalComplex {
  CoherentSubdivision subdivision;
  std::vector<TropicalFace> faces;  // ordered by dimension
  std::vector<Component> components;
  std::optional<Polytope> moment_polytope;  // C₀ when 0 ∈ A

  std::size_t dim() const { return subdivision.height.dim(); }
  std::size_t count(std::size_t k) const;
  std::size_t count_bounded(std::size_t k) const;
};

TropicalComplex tropical_complex(const HeightFunction& h);

// |argmax| ≥ 2.
bool on_tropical_hypersurface(const HeightFunction& h, const RationalVector& u);

}  // namespace tropmirror::tropical
