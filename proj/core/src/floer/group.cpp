#include "tropmirror/floer/group.hpp"

#include <algorithm>

#include "tropmirror/diagnostics.hpp"
#include "tropmirror/error.hpp"

namespace tropmirror::floer {

FloerGroup::FloerGroup(long l1, long l2, std::size_t n, std::vector<FloerGenerator> basis)
    : l1_(l1), l2_(l2), n_(n), basis_(std::move(basis)) {
  std::sort(basis_.begin(), basis_.end(), [](const auto& a, const auto& b) { return a.point < b.point; });
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i].point, i);
}

std::size_t FloerGroup::index_of(const RationalVector& point) const {
  const auto it = index_.find(point);
  return it == index_.end() ? basis_.size() : it->second;
}

int FloerGroup::degree() const { return basis_.empty() ? 0 : basis_.front().cohomological_degree(n_); }

FloerGroup floer_group(const Polytope& q, long l1, long l2) {
  const std::size_t n = q.ambient_dim();
  if (!q.contains_in_interior(RationalVector(n))) warn("0 is not an interior point of Q; Floer groups may be degenerate");
  std::vector<FloerGenerator> basis;
  if (l1 == l2) {
    basis.push_back({l1, l2, RationalVector(n), static_cast<int>(n)});
  } else if (l1 < l2) {
    for (auto& p : lattice_points(q, Integer(l2 - l1))) basis.push_back({l1, l2, std::move(p), static_cast<int>(n)});
  } else if (!q.lower_dimensional()) {
    for (auto& p : interior_lattice_points(q, Integer(l1 - l2))) basis.push_back({l1, l2, std::move(p), 0});
  }
  return FloerGroup(l1, l2, n, std::move(basis));
}

RationalVector triangle_target(long l1, long l2, long l3, const RationalVector& p, const RationalVector& q) {
  if (l1 == l3) throw Error(ErrorCode::DegenerateTriple, "l1 = l3 = " + std::to_string(l1));
  RationalVector r = Rational(l2 - l1) * p + Rational(l3 - l2) * q;
  r *= Rational(1) / Rational(l3 - l1);
  return r;
}

bool ordering_holds(long l1, long l2, long l3) {
  return (l1 < l2 && ((l3 < l1 && l1 < l2) || (l1 < l2 && l2 < l3))) || (l2 < l1 && l2 < l3 && l3 < l1);
}

bool in_generator_set(const Polytope& q, long l1, long l2, const RationalVector& r) {
  if (l1 == l2) return r == RationalVector(q.ambient_dim());
  const long d = l1 < l2 ? l2 - l1 : l1 - l2;
  if (!is_integral(Rational(d) * r)) return false;
  return l1 < l2 ? q.contains(r) : q.contains_in_interior(r);
}

bool triangle_exists(long l1, long l2, long l3, const RationalVector& p, const RationalVector& q,
                     const Polytope& polytope) {
  const RationalVector r = triangle_target(l1, l2, l3, p, q);
  return ordering_holds(l1, l2, l3) && in_generator_set(polytope, l1, l3, r);
}

FloerElement cup_product(const FloerGenerator& x, const FloerGenerator& y, const Polytope& q, ProductAudit* audit) {
  if (x.l2 != y.l1) throw Error(ErrorCode::InvalidArgument, "cup product needs matching middle twist");
  const long l1 = x.l1, l2 = x.l2, l3 = y.l2;
  FloerElement out{l1, l3, std::nullopt, 0};
  if (l1 == l2) {
    out.point = y.point;
    out.coefficient = 1;
    return out;
  }
  if (l2 == l3) {
    out.point = x.point;
    out.coefficient = 1;
    return out;
  }
  if (l1 == l3) return out;
  if (x.point == y.point && !q.contains_in_interior(x.point)) {
    if (audit) ++audit->boundary_coincidences;
    else warn("audit: product with p = q = r = " + to_string(x.point) + " on the boundary of Q");
  }
  if (!triangle_exists(l1, l2, l3, x.point, y.point, q)) return out;
  out.point = triangle_target(l1, l2, l3, x.point, y.point);
  out.coefficient = 1;
  return out;
}

std::size_t serre_dual_dimension(const Polytope& q, long j) {
  if (j >= 0) throw Error(ErrorCode::InvalidArgument, "serre_dual_dimension needs j < 0");
  return interior_lattice_points(q, Integer(-j)).size();
}

}  // namespace tropmirror::floer
