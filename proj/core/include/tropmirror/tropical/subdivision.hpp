#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tropmirror/lattice/polytope.hpp"
#include "tropmirror/tropical/height.hpp"

namespace tropmirror::tropical {

// u ↦ ⟨gradient, u⟩ + constant.
struct AffineFunction {
  RationalVector gradient;
  Rational constant;

  Rational operator()(const LatticeVector& x) const { return dot(gradient, x) + constant; }
};

// A cell of the subdivision of any dimension. points lists every element of A
// lying on the cell and on the lower hull; vertices are the corners.
struct Cell {
  std::size_t dim = 0;
  std::vector<std::size_t> points;
  std::vector<std::size_t> vertices;
  bool on_boundary = false;           // contained in ∂P
  std::vector<std::size_t> maximal;   // indices of maximal cells containing it
};

struct CoherentSubdivision {
  HeightFunction height;
  Polytope newton;
  // Maximal cells with the affine function supporting the lower hull there.
  std::vector<Cell> cells;
  std::vector<AffineFunction> affine;
  // Every cell of every dimension, ordered by dimension then point set.
  std::vector<Cell> faces;
  // Pairs of maximal cells sharing an (n−1)-face.
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  bool triangulation = false;
  bool maximal = false;  // triangulation with every simplex unimodular

  // Index into faces of the cell with this exact point set, or faces.size().
  std::size_t find_face(const std::vector<std::size_t>& points) const;
};

// Exact lower-hull subdivision of the lifted points (α, ν(α)). Throws
// DegenerateSupport when A does not affinely span ℝⁿ.
CoherentSubdivision regular_subdivision(const HeightFunction& h);

// True iff every full-dimensional cell containing 0 is conv({0} ∪ τ) for a
// maximal cone τ of the fan. Propagates NotConvex.
bool check_bundle_subdivision(const Fan& fan, const SupportFunction& phi);

}  // namespace tropmirror::tropical
