#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "tropmirror/floer/algebra.hpp"

namespace tropmirror::coordring {

// ⊕_{j ≤ J} ℂ^{jQ ∩ ℤⁿ} with (j, m)·(k, m') = (j + k, m + m').
class SectionRing {
 public:
  static constexpr std::size_t truncated = std::numeric_limits<std::size_t>::max();

  SectionRing(Polytope q, long max_degree, std::vector<std::vector<LatticeVector>> basis);

  const Polytope& polytope() const noexcept { return q_; }
  long max_degree() const noexcept { return max_degree_; }
  const std::vector<LatticeVector>& basis(long j) const { return basis_.at(static_cast<std::size_t>(j)); }
  std::size_t dim(long j) const { return basis(j).size(); }
  // Index of m in degree j, or dim(j).
  std::size_t index_of(long j, const LatticeVector& m) const;
  // Index of (j,p)·(k,q) in degree j + k; `truncated` beyond J.
  std::size_t product(long j, std::size_t p, long k, std::size_t q) const;

 private:
  Polytope q_;
  long max_degree_ = 0;
  std::vector<std::vector<LatticeVector>> basis_;
  std::vector<std::map<LatticeVector, std::size_t>> index_;
};

// Bases from lattice points of the dilates jQ. Warns when Q is not a lattice
// polytope.
SectionRing section_ring(const Polytope& q, long max_degree);

// |jQ ∩ ℤⁿ| for j = 0..j_max.
std::vector<std::size_t> hilbert_function(const Polytope& q, long j_max);
// |interior(jQ) ∩ ℤⁿ| for j = 0..j_max, with 0 at j = 0.
std::vector<std::size_t> interior_counts(const Polytope& q, long j_max);

// Counting polynomial fitted through L(0..n), evaluated at j.
Rational ehrhart_value(const Polytope& q, long j);

struct Mismatch {
  long j = 0, k = 0;
  std::size_t p = 0, q = 0;
  std::string floer;
  std::string ring;
};

struct IsomorphismReport {
  std::vector<bool> bijection_ok;  // per degree 0..J
  std::size_t products_checked = 0;
  std::size_t dual_products_checked = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> notes;
  bool success() const;
};

// Φ(j, p) = (j, j·p). Checks Φ bijects every degree and carries each tabulated
// Floer product to the ring product, then the transposed products
// HF⁰(L, L(l)) ⊗ HF^n(L, L(−l−m)) → HF^n(L, L(−m)) against lattice addition.
IsomorphismReport verify_isomorphism(const floer::GradedAlgebra& algebra, const SectionRing& ring);

struct SerreRow {
  long j = 0;
  std::size_t floer = 0;     // dim HF^n(L, L(−j))
  std::size_t interior = 0;  // |interior(jQ) ∩ ℤⁿ|
  Rational reciprocity;      // (−1)ⁿ L(−j)
  bool ok() const { return floer == interior && reciprocity == Rational(interior); }
};

struct SerreReport {
  std::vector<SerreRow> rows;
  bool ok() const;
};

// Requires j_max ≥ 1.
SerreReport serre_check(const Polytope& q, long j_max);

}  // namespace tropmirror::coordring
