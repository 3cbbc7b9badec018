#include "tropmirror/lattice/fan.hpp"

#include <algorithm>
#include <map>

#include "tropmirror/detail/subsets.hpp"
#include "tropmirror/diagnostics.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/lattice/linalg.hpp"

namespace tropmirror {
namespace {

linalg::Matrix cone_matrix(const Fan& fan, const Cone& cone) {
  linalg::Matrix m;
  for (auto i : cone) m.push_back(to_rational(fan.rays()[i]).coords());
  return m;
}

void require_simplicial(const Fan& fan, const Cone& cone) {
  if (cone.size() != fan.dim())
    throw Error(ErrorCode::MalformedFan, "cone " + cone_label(cone) + " has " + std::to_string(cone.size()) +
                                             " rays in dimension " + std::to_string(fan.dim()));
}

}  // namespace

std::string cone_label(const Cone& cone) {
  std::string s = "{";
  for (std::size_t i = 0; i < cone.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cone[i]);
  }
  return s + "}";
}

Fan::Fan(std::vector<LatticeVector> rays, std::vector<Cone> max_cones)
    : rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
  if (rays_.empty()) throw Error(ErrorCode::MalformedFan, "fan has no rays");
  dim_ = rays_.front().dim();
  if (dim_ == 0) throw Error(ErrorCode::MalformedFan, "rays of dimension 0");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    if (r.dim() != dim_) throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " has wrong dimension");
    if (!is_primitive(r))
      throw Error(ErrorCode::MalformedFan, "ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
  }
  if (max_cones_.empty()) throw Error(ErrorCode::MalformedFan, "fan has no maximal cones");
  for (auto& c : max_cones_) {
    for (auto i : c)
      if (i >= rays_.size()) throw Error(ErrorCode::MalformedFan, "cone " + cone_label(c) + " indexes past the ray list");
    Cone sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw Error(ErrorCode::MalformedFan, "cone " + cone_label(c) + " repeats a ray");
  }
}

Fan Fan::transformed(const std::vector<LatticeVector>& matrix_rows) const {
  std::vector<LatticeVector> out;
  for (const auto& r : rays_) {
    LatticeVector v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) v[i] = dot(matrix_rows[i], r);
    out.push_back(std::move(v));
  }
  return Fan(std::move(out), max_cones_);
}

bool is_smooth(const Fan& fan) {
  bool smooth = true;
  for (const auto& cone : fan.max_cones()) {
    require_simplicial(fan, cone);
    const Rational det = linalg::determinant(cone_matrix(fan, cone));
    if (det != 1 && det != -1) smooth = false;
  }
  return smooth;
}

bool is_complete(const Fan& fan) {
  const std::size_t n = fan.dim();
  if (n > 3) throw Error(ErrorCode::InvalidArgument, "completeness check supported for n <= 3 only");
  for (const auto& cone : fan.max_cones()) {
    require_simplicial(fan, cone);
    if (linalg::determinant(cone_matrix(fan, cone)) == 0) return false;
  }

  // Every wall lies in exactly two maximal cones.
  std::map<Cone, int> walls;
  for (const auto& cone : fan.max_cones()) {
    Cone sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    detail::for_each_subset(n, n - 1, [&](const std::vector<std::size_t>& s) {
      Cone w;
      for (auto i : s) w.push_back(sorted[i]);
      ++walls[w];
      return true;
    });
  }
  for (const auto& [w, count] : walls)
    if (count != 2) return false;

  // Sampled directions: covered by a closed cone, interior to at most one.
  std::vector<long> x(n, -5);
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](long v) { return v != 0; })) {
      int closed = 0, open = 0;
      for (const auto& cone : fan.max_cones()) {
        linalg::Matrix a(n, std::vector<Rational>(n));
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r) a[r][c] = Rational(fan.rays()[cone[c]][r]);
        std::vector<Rational> b(n);
        for (std::size_t r = 0; r < n; ++r) b[r] = x[r];
        const auto lambda = linalg::solve(a, b);
        if (!lambda) continue;
        if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; })) ++closed;
        if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l > 0; })) ++open;
      }
      if (closed < 1 || open > 1) return false;
    }
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (x[i] < 5) {
        ++x[i];
        break;
      }
      x[i] = -5;
      if (i == 0) return true;
    }
  }
}

void check_convex(const Fan& fan, const SupportFunction& phi, bool strict) {
  if (phi.values.size() != fan.rays().size())
    throw Error(ErrorCode::MalformedInput, "support function has " + std::to_string(phi.values.size()) +
                                               " values for " + std::to_string(fan.rays().size()) + " rays");
  const auto& cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const Cone& tau = cones[c];
    require_simplicial(fan, tau);
    std::vector<Rational> b;
    for (auto i : tau) b.push_back(phi.values[i]);
    const auto m = linalg::solve(cone_matrix(fan, tau), b);
    if (!m) throw Error(ErrorCode::MalformedFan, "cone " + cone_label(tau) + " is not full-dimensional");
    const RationalVector mt(*m);
    for (std::size_t j = 0; j < fan.rays().size(); ++j) {
      if (std::find(tau.begin(), tau.end(), j) != tau.end()) continue;
      const Rational lhs = dot(fan.rays()[j], mt);
      if (lhs < phi.values[j]) continue;
      if (!strict && lhs == phi.values[j]) continue;
      std::string other = "a cone containing ray " + std::to_string(j);
      for (std::size_t o = 0; o < cones.size(); ++o)
        if (o != c && std::find(cones[o].begin(), cones[o].end(), j) != cones[o].end()) {
          other = cone_label(cones[o]);
          break;
        }
      throw Error(ErrorCode::NotConvex, std::string(strict ? "support function fails strict convexity" : "support function fails convexity") + " between cone " + cone_label(tau) +
                                            " and cone " + other + " (ray " + std::to_string(j) + ")");
    }
  }
}

Polytope polytope_from_bundle(const Fan& fan, const SupportFunction& phi) {
  check_convex(fan, phi, false);
  try {
    check_convex(fan, phi, true);
  } catch (const Error& e) {
    warn(std::string("support function is convex but not strictly convex: ") + e.what());
  }
  if (fan.dim() <= 3 && !is_complete(fan)) throw Error(ErrorCode::Unbounded, "fan is not complete");
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < fan.rays().size(); ++i) hs.push_back({fan.rays()[i], phi.values[i]});
  return Polytope::from_inequalities(hs, fan.dim());
}

}  // namespace tropmirror
