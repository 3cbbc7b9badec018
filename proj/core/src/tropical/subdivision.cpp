#include "tropmirror/tropical/subdivision.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tropmirror/detail/subsets.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/lattice/linalg.hpp"

namespace tropmirror::tropical {
namespace {

using IndexSet = std::vector<std::size_t>;

std::size_t affine_rank(const HeightFunction& h, const IndexSet& pts) {
  std::vector<LatticeVector> dirs;
  for (std::size_t k = 1; k < pts.size(); ++k) dirs.push_back(h.support[pts[k]] - h.support[pts[0]]);
  return linalg::rank(linalg::from_rows(dirs));
}

std::vector<RationalVector> coords(const HeightFunction& h, const IndexSet& pts) {
  std::vector<RationalVector> out;
  for (auto i : pts) out.push_back(to_rational(h.support[i]));
  return out;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const IndexSet& big, const IndexSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// All proper faces of a full-dimensional cell as point sets: facets of its
// hull, closed under intersection.
std::set<IndexSet> cell_faces(const HeightFunction& h, const IndexSet& pts) {
  const Polytope p = Polytope::hull(coords(h, pts));
  std::set<IndexSet> faces;
  for (const auto& hs : p.hrep()) {
    IndexSet f;
    for (auto i : pts)
      if (dot(hs.normal, to_rational(h.support[i])) == hs.bound) f.push_back(i);
    faces.insert(f);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<IndexSet> cur(faces.begin(), faces.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a + 1; b < cur.size(); ++b) {
        IndexSet f = intersect(cur[a], cur[b]);
        if (!f.empty() && faces.insert(f).second) grew = true;
      }
  }
  return faces;
}

}  // namespace

std::size_t CoherentSubdivision::find_face(const std::vector<std::size_t>& points) const {
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].points == points) return i;
  return faces.size();
}

CoherentSubdivision regular_subdivision(const HeightFunction& h) {
  validate(h);
  const std::size_t n = h.dim();
  const std::size_t m = h.size();
  IndexSet all(m);
  for (std::size_t i = 0; i < m; ++i) all[i] = i;
  if (affine_rank(h, all) < n) throw Error(ErrorCode::DegenerateSupport, "support does not affinely span the ambient space");

  CoherentSubdivision out;
  out.height = h;
  out.newton = Polytope::hull(coords(h, all));

  std::map<IndexSet, AffineFunction> lower;
  detail::for_each_subset(m, n + 1, [&](const IndexSet& s) {
    // ⟨g, α⟩ + c = ν(α) on s.
    linalg::Matrix a;
    std::vector<Rational> b;
    for (auto i : s) {
      std::vector<Rational> row = to_rational(h.support[i]).coords();
      row.push_back(1);
      a.push_back(std::move(row));
      b.push_back(h.heights[i]);
    }
    const auto sol = linalg::solve(a, b);
    if (!sol) return true;
    AffineFunction f{RationalVector(std::vector<Rational>(sol->begin(), sol->begin() + n)), (*sol)[n]};
    IndexSet tie;
    for (std::size_t i = 0; i < m; ++i) {
      const Rational v = f(h.support[i]);
      if (v > h.heights[i]) return true;
      if (v == h.heights[i]) tie.push_back(i);
    }
    lower.emplace(std::move(tie), std::move(f));
    return true;
  });

  std::set<IndexSet> all_faces;
  for (const auto& [pts, f] : lower) {
    Cell c;
    c.dim = n;
    c.points = pts;
    out.cells.push_back(c);
    out.affine.push_back(f);
    all_faces.insert(pts);
    for (const auto& face : cell_faces(h, pts)) all_faces.insert(face);
  }

  for (const auto& pts : all_faces) {
    Cell c;
    c.points = pts;
    c.dim = affine_rank(h, pts);
    const Polytope p = Polytope::hull(coords(h, pts));
    for (auto i : pts)
      if (std::binary_search(p.vertices().begin(), p.vertices().end(), to_rational(h.support[i])))
        c.vertices.push_back(i);
    for (const auto& hs : out.newton.hrep()) {
      bool tight = true;
      for (auto i : pts)
        if (dot(hs.normal, to_rational(h.support[i])) != hs.bound) {
          tight = false;
          break;
        }
      if (tight) {
        c.on_boundary = true;
        break;
      }
    }
    for (std::size_t k = 0; k < out.cells.size(); ++k)
      if (includes(out.cells[k].points, pts)) c.maximal.push_back(k);
    out.faces.push_back(std::move(c));
  }
  std::stable_sort(out.faces.begin(), out.faces.end(),
                   [](const Cell& a, const Cell& b) { return a.dim < b.dim; });
  for (auto& cell : out.cells) {
    const std::size_t idx = out.find_face(cell.points);
    cell = out.faces[idx];
  }

  for (const auto& f : out.faces)
    if (f.dim + 1 == n && f.maximal.size() == 2) out.adjacency.emplace_back(f.maximal[0], f.maximal[1]);

  out.triangulation = std::all_of(out.cells.begin(), out.cells.end(),
                                  [n](const Cell& c) { return c.points.size() == n + 1; });
  out.maximal = out.triangulation;
  if (out.triangulation)
    for (const auto& c : out.cells) {
      std::vector<LatticeVector> edges;
      for (std::size_t k = 1; k < c.points.size(); ++k)
        edges.push_back(h.support[c.points[k]] - h.support[c.points[0]]);
      const Rational det = linalg::determinant(linalg::from_rows(edges));
      if (det != 1 && det != -1) out.maximal = false;
    }
  return out;
}

bool check_bundle_subdivision(const Fan& fan, const SupportFunction& phi) {
  check_convex(fan, phi, true);
  const HeightFunction h = height_from_bundle(fan, phi);
  const CoherentSubdivision sub = regular_subdivision(h);
  std::set<IndexSet> expected;
  for (const auto& cone : fan.max_cones()) {
    IndexSet s{0};
    for (auto i : cone) s.push_back(i + 1);
    std::sort(s.begin(), s.end());
    expected.insert(s);
  }
  for (const auto& c : sub.cells)
    if (std::binary_search(c.points.begin(), c.points.end(), std::size_t{0}) && !expected.count(c.points))
      return false;
  return true;
}

}  // namespace tropmirror::tropical
