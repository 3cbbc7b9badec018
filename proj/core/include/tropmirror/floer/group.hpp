#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "tropmirror/lattice/polytope.hpp"

namespace tropmirror::floer {

// L(j): the zero section twisted j times by (u, θ) ↦ (u, θ − 2πu).
struct TwistedSection {
  long twist = 0;
  TwistedSection twisted(long k) const { return {twist + k}; }
};

struct FloerGenerator {
  long l1 = 0;
  long l2 = 0;
  RationalVector point;
  int homological_degree = 0;
  int cohomological_degree(std::size_t n) const { return static_cast<int>(n) - homological_degree; }
};

class FloerGroup {
 public:
  FloerGroup() = default;
  FloerGroup(long l1, long l2, std::size_t n, std::vector<FloerGenerator> basis);

  long l1() const noexcept { return l1_; }
  long l2() const noexcept { return l2_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<FloerGenerator>& basis() const noexcept { return basis_; }
  const FloerGenerator& operator[](std::size_t i) const { return basis_[i]; }
  // Index of the generator at this point, or dim() when there is none.
  std::size_t index_of(const RationalVector& point) const;
  // Cohomological degree shared by every generator (0 for an empty group).
  int degree() const;

 private:
  long l1_ = 0;
  long l2_ = 0;
  std::size_t n_ = 0;
  std::vector<FloerGenerator> basis_;
  std::map<RationalVector, std::size_t> index_;
};

// Q ∩ (1/(l2−l1))ℤⁿ when l1 < l2, interior points of Q in (1/(l1−l2))ℤⁿ when
// l1 > l2, the origin alone when l1 = l2. Basis sorted lexicographically.
// Warns when 0 is not interior to Q.
FloerGroup floer_group(const Polytope& q, long l1, long l2);

// r = ((l2−l1)p + (l3−l2)q)/(l3−l1). Throws DegenerateTriple when l1 = l3.
RationalVector triangle_target(long l1, long l2, long l3, const RationalVector& p, const RationalVector& q);

// (l1<l2 and (l3<l1<l2 or l1<l2<l3)) or (l2<l1 and l2<l3<l1).
bool ordering_holds(long l1, long l2, long l3);

// Whether r is a generator of the (l1, l2) group: lattice condition plus the
// boundary rule (closed Q when l1 < l2, interior when l1 > l2).
bool in_generator_set(const Polytope& q, long l1, long l2, const RationalVector& r);

bool triangle_exists(long l1, long l2, long l3, const RationalVector& p, const RationalVector& q,
                     const Polytope& polytope);

// Zero when `point` is empty; otherwise +1 times the generator at `point`.
struct FloerElement {
  long l1 = 0;
  long l2 = 0;
  std::optional<RationalVector> point;
  int coefficient = 0;
  bool is_zero() const { return !point || coefficient == 0; }
};

// Configurations decided by the boundary rule rather than by moving points off ∂Q.
struct ProductAudit {
  std::size_t boundary_coincidences = 0;  // distinct twists, p = q = r ∈ ∂Q
};

// x ∈ HF(L(l1), L(l2)), y ∈ HF(L(l2), L(l3)). A repeated twist acts through
// the unit; l1 = l3 ≠ l2 lands in degree n of HF(L(l1), L(l1)), which is 0.
// Boundary coincidences are counted in `audit`, or logged when it is null.
FloerElement cup_product(const FloerGenerator& x, const FloerGenerator& y, const Polytope& q,
                         ProductAudit* audit = nullptr);

// |interior(|j|Q) ∩ ℤⁿ| = dim HF^n(L, L(j)) for j < 0.
std::size_t serre_dual_dimension(const Polytope& q, long j);

}  // namespace tropmirror::floer
