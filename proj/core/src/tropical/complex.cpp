#include "tropmirror/tropical/complex.hpp"

#include <algorithm>

#include "tropmirror/error.hpp"

namespace tropmirror::tropical {

std::size_t TropicalComplex::count(std::size_t k) const {
  return static_cast<std::size_t>(
      std::count_if(faces.begin(), faces.end(), [k](const TropicalFace& f) { return f.dim == k; }));
}

std::size_t TropicalComplex::count_bounded(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(
      faces.begin(), faces.end(), [k](const TropicalFace& f) { return f.dim == k && f.bounded; }));
}

TropicalComplex tropical_complex(const HeightFunction& h) {
  TropicalComplex out;
  out.subdivision = regular_subdivision(h);
  const auto& sub = out.subdivision;
  const std::size_t n = h.dim();
  const std::size_t m = h.size();

  for (std::size_t fi = 0; fi < sub.faces.size(); ++fi) {
    const Cell& sigma = sub.faces[fi];
    if (sigma.dim == 0) continue;
    TropicalFace face;
    face.dim = n - sigma.dim;
    face.dual = fi;
    const std::size_t a0 = sigma.vertices.front();
    for (std::size_t k = 1; k < sigma.vertices.size(); ++k) {
      const std::size_t a = sigma.vertices[k];
      face.equalities.push_back({h.support[a] - h.support[a0], h.heights[a] - h.heights[a0]});
    }
    for (std::size_t g = 0; g < m; ++g) {
      if (std::binary_search(sigma.points.begin(), sigma.points.end(), g)) continue;
      face.inequalities.push_back({h.support[g] - h.support[a0], h.heights[g] - h.heights[a0]});
    }
    for (auto c : sigma.maximal) face.vertices.push_back(sub.affine[c].gradient);
    std::sort(face.vertices.begin(), face.vertices.end());
    for (const auto& hs : sub.newton.hrep()) {
      const bool tight = std::all_of(sigma.points.begin(), sigma.points.end(), [&](std::size_t i) {
        return dot(hs.normal, to_rational(h.support[i])) == hs.bound;
      });
      if (tight) face.recession.push_back(hs.normal);
    }
    face.bounded = face.recession.empty();
    RationalVector p(n);
    for (const auto& v : face.vertices) p += v;
    p *= Rational(1, static_cast<long>(face.vertices.size()));
    for (const auto& r : face.recession) p += to_rational(r);
    face.interior_point = p;
    out.faces.push_back(std::move(face));
  }
  std::stable_sort(out.faces.begin(), out.faces.end(),
                   [](const TropicalFace& a, const TropicalFace& b) { return a.dim < b.dim; });

  for (std::size_t a = 0; a < m; ++a) {
    Component c;
    c.alpha = a;
    c.empty = sub.find_face({a}) == sub.faces.size();
    for (std::size_t b = 0; b < m; ++b)
      if (b != a) c.inequalities.push_back({h.support[b] - h.support[a], h.heights[b] - h.heights[a]});
    for (const auto& f : sub.faces) {
      if (f.dim != 1) continue;
      const auto& v = f.vertices;
      if (v.size() == 2 && (v[0] == a || v[1] == a)) c.neighbours.push_back(v[0] == a ? v[1] : v[0]);
    }
    std::sort(c.neighbours.begin(), c.neighbours.end());
    out.components.push_back(std::move(c));
  }

  const std::size_t origin = h.index_of(LatticeVector(n));
  if (origin < m && !out.components[origin].empty) {
    try {
      out.moment_polytope = Polytope::from_inequalities(out.components[origin].inequalities, n);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Unbounded) throw;
    }
  }
  return out;
}

bool on_tropical_hypersurface(const HeightFunction& h, const RationalVector& u) {
  return legendre_value(h, u).argmax.size() >= 2;
}

}  // namespace tropmirror::tropical
