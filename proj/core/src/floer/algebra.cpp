#include "tropmirror/floer/algebra.hpp"

#include <algorithm>

#include "tropmirror/diagnostics.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/parallel.hpp"

namespace tropmirror::floer {

GradedAlgebra::GradedAlgebra(Polytope q, long max_twist) : q_(std::move(q)), max_twist_(max_twist) {}

std::size_t GradedAlgebra::product(long j, std::size_t p, long k, std::size_t q) const {
  if (p == zero || q == zero) return zero;
  return table_.at({j, k})[p * dim(k) + q];
}

void GradedAlgebra::set_product(long j, std::size_t p, long k, std::size_t q, std::size_t r) {
  table_.at({j, k}).at(p * dim(k) + q) = r;
}

std::vector<std::array<std::size_t, 3>> GradedAlgebra::entries(long j, long k) const {
  std::vector<std::array<std::size_t, 3>> out;
  const auto& t = table_.at({j, k});
  const std::size_t dk = dim(k);
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i] != zero) out.push_back({i / dk, i % dk, t[i]});
  return out;
}

GradedAlgebra assemble_algebra(const Polytope& q, long max_twist) {
  if (max_twist < 1) throw Error(ErrorCode::InvalidArgument, "J must be at least 1");
  GradedAlgebra alg(q, max_twist);
  for (long j = 0; j <= max_twist; ++j) alg.pieces_.push_back(floer_group(q, 0, j));

  for (long j = 0; j <= max_twist; ++j)
    for (long k = 0; j + k <= max_twist; ++k) {
      const FloerGroup& a = alg.piece(j);
      const FloerGroup& b = alg.piece(k);
      const FloerGroup& c = alg.piece(j + k);
      std::vector<std::size_t> table(a.dim() * b.dim(), GradedAlgebra::zero);
      std::vector<ProductAudit> audits(a.dim());
      parallel_for(a.dim(), [&](std::size_t p) {
        for (std::size_t i = 0; i < b.dim(); ++i) {
          const FloerGenerator y{j, j + k, b[i].point, b[i].homological_degree};
          const FloerElement e = cup_product(a[p], y, q, &audits[p]);
          if (e.is_zero()) continue;
          const std::size_t r = c.index_of(*e.point);
          if (r == c.dim())
            throw Error(ErrorCode::AssociativityViolation, "product " + to_string(*e.point) + " is not a basis element");
          table[p * b.dim() + i] = r;
        }
      });
      for (const auto& au : audits) alg.audit_.boundary_coincidences += au.boundary_coincidences;
      alg.table_.emplace(std::make_pair(j, k), std::move(table));
    }

  const AxiomReport report = check_axioms(alg);
  if (report.associativity_violations > 0 || report.unit_violations > 0)
    throw Error(ErrorCode::AssociativityViolation,
                std::to_string(report.associativity_violations) + " associativity and " +
                    std::to_string(report.unit_violations) + " unit violations");
  if (alg.boundary_coincidences() > 0)
    warn("audit: " + std::to_string(alg.boundary_coincidences()) +
         " products with p = q = r on the boundary of Q, decided by the boundary rule");
  return alg;
}

AxiomReport check_axioms(const GradedAlgebra& alg) {
  AxiomReport rep;
  const long J = alg.max_twist();
  for (long j = 0; j <= J; ++j)
    for (long k = 0; j + k <= J; ++k)
      for (long l = 0; j + k + l <= J; ++l)
        for (std::size_t p = 0; p < alg.dim(j); ++p)
          for (std::size_t q = 0; q < alg.dim(k); ++q)
            for (std::size_t r = 0; r < alg.dim(l); ++r) {
              ++rep.associativity_checked;
              const auto lhs = alg.product(j + k, alg.product(j, p, k, q), l, r);
              const auto rhs = alg.product(j, p, k + l, alg.product(k, q, l, r));
              if (lhs != rhs) ++rep.associativity_violations;
            }

  for (long j = 0; j <= J; ++j)
    for (std::size_t p = 0; p < alg.dim(j); ++p) {
      rep.unit_checked += 2;
      if (alg.product(0, 0, j, p) != p) ++rep.unit_violations;
      if (alg.product(j, p, 0, 0) != p) ++rep.unit_violations;
    }

  const std::size_t n = alg.polytope().ambient_dim();
  for (long j = 0; j <= J; ++j)
    for (long k = 0; j + k <= J; ++k)
      for (const auto& [p, q, r] : alg.entries(j, k)) {
        ++rep.degree_checked;
        const auto& target = alg.piece(j + k);
        const int want = alg.piece(j)[p].cohomological_degree(n) + alg.piece(k)[q].cohomological_degree(n);
        if (r >= target.dim() || target[r].cohomological_degree(n) != want || target.l2() != j + k)
          ++rep.degree_violations;
        ++rep.commutativity_checked;
        if (alg.product(k, q, j, p) != r) ++rep.commutativity_violations;
      }
  return rep;
}

std::vector<std::array<std::size_t, 3>> dual_products(const GradedAlgebra& alg, long l, long m) {
  if (l < 1 || m < 1 || l + m > alg.max_twist())
    throw Error(ErrorCode::InvalidArgument, "dual products need l, m ≥ 1 and l + m ≤ J");
  const auto& q = alg.polytope();
  const FloerGroup source = floer_group(q, 0, -(l + m));
  const FloerGroup target = floer_group(q, 0, -m);
  std::vector<std::array<std::size_t, 3>> out;
  for (const auto& [p, qi, r] : alg.entries(l, m)) {
    const std::size_t qd = target.index_of(alg.piece(m)[qi].point);
    if (qd == target.dim()) continue;
    const std::size_t rd = source.index_of(alg.piece(l + m)[r].point);
    if (rd == source.dim()) throw Error(ErrorCode::AssociativityViolation, "interior sum left the interior");
    out.push_back({p, rd, qd});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tropmirror::floer
