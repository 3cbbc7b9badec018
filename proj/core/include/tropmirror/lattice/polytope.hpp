#pragma once

#include <cstddef>
#include <vector>

#include "tropmirror/lattice/vector.hpp"

namespace tropmirror {

// ⟨normal, y⟩ ≤ bound.
struct Halfspace {
  LatticeVector normal;
  Rational bound;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

// Bounded convex polytope with both representations kept in canonical form:
// hrep sorted, primitive integer normals, equalities stored as an opposite
// pair of halfspaces; vertices sorted lexicographically.
class Polytope {
 public:
  // Convex hull of a non-empty finite set. Lower-dimensional hulls are
  // returned with lower_dimensional() set.
  static Polytope hull(const std::vector<RationalVector>& points);
  static Polytope hull(const std::vector<LatticeVector>& points);

  // {y : ⟨a_i, y⟩ ≤ b_i}. Throws Unbounded when the normals do not
  // positively span the ambient space, EmptyPolytope when infeasible.
  static Polytope from_inequalities(const std::vector<Halfspace>& halfspaces,
                                    std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return dim_; }
  bool lower_dimensional() const noexcept { return dim_ < ambient_dim_; }

  const std::vector<Halfspace>& hrep() const noexcept { return hrep_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }

  bool contains(const RationalVector& y) const;
  // Every inequality strict. Always false for lower-dimensional polytopes.
  bool contains_in_interior(const RationalVector& y) const;
  bool contains_origin() const;
  bool is_lattice_polytope() const;

  Polytope dilate(const Rational& factor) const;
  Polytope translate(const RationalVector& offset) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.hrep_ == b.hrep_ && a.vertices_ == b.vertices_;
  }

 private:
  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  std::vector<Halfspace> hrep_;
  std::vector<RationalVector> vertices_;
};

inline Polytope hull(const std::vector<RationalVector>& points) { return Polytope::hull(points); }

// Membership decided from the vertex list alone (barycentric solve over
// affinely independent vertex subsets). Independent of the H-rep.
bool vrep_contains(const Polytope& polytope, const RationalVector& y);

// Q ∩ (1/d)ℤⁿ in lexicographic order, boundary included.
std::vector<RationalVector> lattice_points(const Polytope& polytope, const Integer& d);

// (Q − ∂Q) ∩ (1/d)ℤⁿ. Throws LowerDimensional when Q is not full-dimensional.
std::vector<RationalVector> interior_lattice_points(const Polytope& polytope, const Integer& d);

// |jQ ∩ ℤⁿ| computed by dilating the vertices and rebuilding the hull.
std::size_t count_dilate(const Polytope& polytope, const Integer& j);
// |Q ∩ (1/j)ℤⁿ| computed by refining the lattice.
std::size_t count_refine(const Polytope& polytope, const Integer& j);

}  // namespace tropmirror
