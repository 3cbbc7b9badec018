#include "tropmirror/lattice/polytope.hpp"

#include <algorithm>
#include <set>

#include "tropmirror/detail/subsets.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/lattice/linalg.hpp"

namespace tropmirror {
namespace {

bool operator_less(const Halfspace& a, const Halfspace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.bound < b.bound;
}

// First nonzero coordinate positive.
LatticeVector positive_lex(LatticeVector v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) v = -v;
    break;
  }
  return v;
}

Rational evaluate(const LatticeVector& a, const RationalVector& y) { return dot(a, y); }

std::vector<RationalVector> dedupe(std::vector<RationalVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

void check_ambient(const std::vector<RationalVector>& pts, std::size_t n) {
  for (const auto& p : pts)
    if (p.dim() != n) throw Error(ErrorCode::InvalidArgument, "points of mixed dimension");
}

}  // namespace

Polytope Polytope::hull(const std::vector<LatticeVector>& points) {
  std::vector<RationalVector> r;
  r.reserve(points.size());
  for (const auto& p : points) r.push_back(to_rational(p));
  return hull(r);
}

Polytope Polytope::hull(const std::vector<RationalVector>& input) {
  if (input.empty()) throw Error(ErrorCode::EmptyPolytope, "hull of an empty point set");
  const std::size_t n = input.front().dim();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension 0");
  check_ambient(input, n);
  const auto pts = dedupe(input);
  const RationalVector& p0 = pts.front();

  std::vector<RationalVector> dirs;
  for (std::size_t i = 1; i < pts.size(); ++i) dirs.push_back(pts[i] - p0);
  const std::size_t d = linalg::rank(linalg::from_rows(dirs));

  Polytope out;
  out.ambient_dim_ = n;
  out.dim_ = d;

  // Equalities: orthogonal complement of the direction space.
  std::vector<RationalVector> eq_normals;
  if (d < n) {
    const auto comp = dirs.empty() ? linalg::nullspace({}, n) : linalg::nullspace(linalg::from_rows(dirs), n);
    for (const auto& w : comp) {
      const LatticeVector a = positive_lex(primitive_multiple(w));
      const Rational b = evaluate(a, p0);
      out.hrep_.push_back({a, b});
      out.hrep_.push_back({-a, -b});
      eq_normals.push_back(to_rational(a));
    }
  }

  // Basis of the direction space L.
  std::vector<RationalVector> basis;
  if (eq_normals.empty()) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n);
      e[i] = 1;
      basis.push_back(e);
    }
  } else {
    basis = linalg::nullspace(linalg::from_rows(eq_normals), n);
  }

  std::set<std::pair<LatticeVector, Rational>> facets;
  if (d >= 1) {
    detail::for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& s) {
      linalg::Matrix rows;
      for (std::size_t k = 1; k < s.size(); ++k) {
        const RationalVector diff = pts[s[k]] - pts[s[0]];
        std::vector<Rational> row;
        for (const auto& bvec : basis) row.push_back(dot(bvec, diff));
        rows.push_back(std::move(row));
      }
      const auto ns = rows.empty() ? linalg::nullspace({}, d) : linalg::nullspace(rows, d);
      if (ns.size() != 1) return true;
      RationalVector a(n);
      for (std::size_t k = 0; k < d; ++k) a += ns[0][k] * basis[k];
      const Rational ref = dot(a, pts[s[0]]);
      bool any_pos = false, any_neg = false;
      for (const auto& p : pts) {
        const Rational v = dot(a, p) - ref;
        if (v > 0) any_pos = true;
        if (v < 0) any_neg = true;
        if (any_pos && any_neg) return true;
      }
      LatticeVector normal = primitive_multiple(a);
      if (any_pos) normal = -normal;
      facets.emplace(normal, evaluate(normal, pts[s[0]]));
      return true;
    });
  }
  for (const auto& [a, b] : facets) out.hrep_.push_back({a, b});
  std::sort(out.hrep_.begin(), out.hrep_.end(), operator_less);

  for (const auto& p : pts) {
    std::vector<LatticeVector> tight;
    for (const auto& [a, b] : facets)
      if (evaluate(a, p) == b) tight.push_back(a);
    if (linalg::rank(linalg::from_rows(tight)) == d) out.vertices_.push_back(p);
  }
  return out;
}

Polytope Polytope::from_inequalities(const std::vector<Halfspace>& halfspaces, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "ambient dimension 0");
  std::vector<Halfspace> hs;
  for (const auto& h : halfspaces) {
    if (h.normal.dim() != n) throw Error(ErrorCode::InvalidArgument, "halfspace of wrong dimension");
    const Integer g = content(h.normal);
    if (g == 0) {
      if (h.bound < 0) throw Error(ErrorCode::EmptyPolytope, "inequality 0 <= negative bound");
      continue;
    }
    Halfspace p = h;
    if (g != 1) {
      for (std::size_t i = 0; i < n; ++i) p.normal[i] /= g;
      p.bound /= Rational(g);
    }
    hs.push_back(std::move(p));
  }

  // Bounded iff the normals positively span: 0 interior to their hull.
  {
    std::vector<RationalVector> normals;
    for (const auto& h : hs) normals.push_back(to_rational(h.normal));
    if (normals.empty() || !hull(normals).contains_in_interior(RationalVector(n)))
      throw Error(ErrorCode::Unbounded, "inequality normals do not positively span the ambient space");
  }

  std::set<RationalVector> verts;
  detail::for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& s) {
    linalg::Matrix a;
    std::vector<Rational> b;
    for (auto i : s) {
      a.push_back(to_rational(hs[i].normal).coords());
      b.push_back(hs[i].bound);
    }
    const auto x = linalg::solve(a, b);
    if (!x) return true;
    const RationalVector y(*x);
    for (const auto& h : hs)
      if (evaluate(h.normal, y) > h.bound) return true;
    verts.insert(y);
    return true;
  });
  if (verts.empty()) throw Error(ErrorCode::EmptyPolytope, "inequality system is infeasible");
  return hull(std::vector<RationalVector>(verts.begin(), verts.end()));
}

bool Polytope::contains(const RationalVector& y) const {
  for (const auto& h : hrep_)
    if (evaluate(h.normal, y) > h.bound) return false;
  return true;
}

bool Polytope::contains_in_interior(const RationalVector& y) const {
  if (lower_dimensional()) return false;
  for (const auto& h : hrep_)
    if (evaluate(h.normal, y) >= h.bound) return false;
  return true;
}

bool Polytope::contains_origin() const { return contains(RationalVector(ambient_dim_)); }

bool Polytope::is_lattice_polytope() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [](const RationalVector& v) { return is_integral(v); });
}

Polytope Polytope::dilate(const Rational& factor) const {
  std::vector<RationalVector> pts;
  for (const auto& v : vertices_) pts.push_back(factor * v);
  return hull(pts);
}

Polytope Polytope::translate(const RationalVector& offset) const {
  std::vector<RationalVector> pts;
  for (const auto& v : vertices_) pts.push_back(v + offset);
  return hull(pts);
}

bool vrep_contains(const Polytope& polytope, const RationalVector& y) {
  const auto& verts = polytope.vertices();
  const std::size_t n = polytope.ambient_dim();
  bool found = false;
  for (std::size_t k = 1; k <= polytope.dim() + 1 && !found; ++k) {
    detail::for_each_subset(verts.size(), k, [&](const std::vector<std::size_t>& s) {
      linalg::Matrix a(n + 1, std::vector<Rational>(k));
      std::vector<Rational> b(n + 1);
      for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r < n; ++r) a[r][c] = verts[s[c]][r];
        a[n][c] = 1;
      }
      for (std::size_t r = 0; r < n; ++r) b[r] = y[r];
      b[n] = 1;
      if (linalg::rank(a) != k) return true;
      const auto lambda = linalg::solve_consistent(a, b);
      if (!lambda) return true;
      if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; })) {
        found = true;
        return false;
      }
      return true;
    });
  }
  return found;
}

namespace {

std::vector<RationalVector> scan(const Polytope& q, const Integer& d, bool strict) {
  if (d <= 0) throw Error(ErrorCode::InvalidArgument, "lattice refinement must be positive");
  const std::size_t n = q.ambient_dim();
  std::vector<Integer> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = q.vertices().front()[i], mx = mn;
    for (const auto& v : q.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = ceil(mn * Rational(d));
    hi[i] = floor(mx * Rational(d));
    if (lo[i] > hi[i]) return {};
  }
  // ⟨a, x⟩ ≤ limit on the integer point x = d·y.
  std::vector<Integer> limits;
  for (const auto& h : q.hrep()) {
    const Rational db = h.bound * Rational(d);
    limits.push_back(strict ? Integer(ceil(db) - 1) : floor(db));
  }
  std::vector<RationalVector> out;
  std::vector<Integer> x = lo;
  while (true) {
    bool inside = true;
    for (std::size_t k = 0; k < limits.size() && inside; ++k) {
      Integer s = 0;
      const auto& a = q.hrep()[k].normal;
      for (std::size_t i = 0; i < n; ++i) s += a[i] * x[i];
      inside = s <= limits[k];
    }
    if (inside) {
      RationalVector y(n);
      for (std::size_t i = 0; i < n; ++i) y[i] = Rational(x[i], d);
      out.push_back(std::move(y));
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < hi[i]) {
        ++x[i];
        break;
      }
      x[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

}  // namespace

std::vector<RationalVector> lattice_points(const Polytope& polytope, const Integer& d) {
  return scan(polytope, d, false);
}

std::vector<RationalVector> interior_lattice_points(const Polytope& polytope, const Integer& d) {
  if (polytope.lower_dimensional())
    throw Error(ErrorCode::LowerDimensional, "interior of a lower-dimensional polytope requested");
  return scan(polytope, d, true);
}

std::size_t count_dilate(const Polytope& polytope, const Integer& j) {
  return lattice_points(polytope.dilate(Rational(j)), 1).size();
}

std::size_t count_refine(const Polytope& polytope, const Integer& j) {
  return lattice_points(polytope, j).size();
}

}  // namespace tropmirror
