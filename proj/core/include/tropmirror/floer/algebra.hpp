#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "tropmirror/floer/group.hpp"

namespace tropmirror::floer {

class GradedAlgebra {
 public:
  static constexpr std::size_t zero = std::numeric_limits<std::size_t>::max();

  GradedAlgebra(Polytope q, long max_twist);

  const Polytope& polytope() const noexcept { return q_; }
  long max_twist() const noexcept { return max_twist_; }
  // HF⁰(L, L(j)) for 0 ≤ j ≤ J.
  const FloerGroup& piece(long j) const { return pieces_.at(static_cast<std::size_t>(j)); }
  std::size_t dim(long j) const { return piece(j).dim(); }

  // Index r of (j,p)·(k,q) in piece j+k, or `zero`.
  std::size_t product(long j, std::size_t p, long k, std::size_t q) const;
  // Nonzero structure constants of the (j, k) table as (p, q, r).
  std::vector<std::array<std::size_t, 3>> entries(long j, long k) const;
  std::size_t boundary_coincidences() const noexcept { return audit_.boundary_coincidences; }
  // Overwrites one structure constant; used to inject faults into verifiers.
  void set_product(long j, std::size_t p, long k, std::size_t q, std::size_t r);

 private:
  friend GradedAlgebra assemble_algebra(const Polytope&, long);
  Polytope q_;
  long max_twist_ = 0;
  std::vector<FloerGroup> pieces_;
  std::map<std::pair<long, long>, std::vector<std::size_t>> table_;  // row-major p·dim(k) + q
  ProductAudit audit_;
};

struct AxiomReport {
  std::size_t associativity_checked = 0, associativity_violations = 0;
  std::size_t unit_checked = 0, unit_violations = 0;
  std::size_t degree_checked = 0, degree_violations = 0;
  std::size_t commutativity_checked = 0, commutativity_violations = 0;
  bool ok() const {
    return associativity_violations + unit_violations + degree_violations + commutativity_violations == 0;
  }
};

// Tabulates every product (0, j, j+k) with j + k ≤ J through cup_product and
// checks the axioms. Throws InvalidArgument for J < 1 and
// AssociativityViolation if the table is not associative and unital.
GradedAlgebra assemble_algebra(const Polytope& q, long max_twist);

// Exhaustive over all tabulated products.
AxiomReport check_axioms(const GradedAlgebra& algebra);

// [p] ⊗ [r]^∨ = [q]^∨ for p ∈ HF⁰(L, L(l)), r ∈ HF^n(L, L(−(l+m))),
// q ∈ HF^n(L, L(−m)): the (l, m) table transposed, restricted to interior q.
// Triples are (p, r, q) indexed in floer_group(Q,0,l), floer_group(Q,0,−(l+m))
// and floer_group(Q,0,−m). Requires l, m ≥ 1 and l + m ≤ J.
std::vector<std::array<std::size_t, 3>> dual_products(const GradedAlgebra& algebra, long l, long m);

}  // namespace tropmirror::floer
