#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/lattice/linalg.hpp"

using namespace tropmirror;
using fixtures::random_rational;

namespace {

RationalVector rv(std::initializer_list<Rational> xs) { return RationalVector(std::vector<Rational>(xs)); }

std::vector<RationalVector> sorted_vertices(std::vector<RationalVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Jarvis march on integer points; returns hull vertices, collinear points dropped.
std::vector<std::pair<long, long>> gift_wrap(std::vector<std::pair<long, long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  auto cross = [](auto o, auto a, auto b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<long, long>> out;
  auto start = pts.front();
  auto cur = start;
  do {
    out.push_back(cur);
    auto next = pts[0] == cur ? pts[1] : pts[0];
    for (const auto& p : pts) {
      if (p == cur) continue;
      const long c = cross(cur, next, p);
      const auto d2 = [&](auto q) { return (q.first - cur.first) * (q.first - cur.first) + (q.second - cur.second) * (q.second - cur.second); };
      if (c < 0 || (c == 0 && d2(p) > d2(next))) next = p;
    }
    cur = next;
  } while (cur != start);
  return out;
}

// Independent exact Lagrange fit of L on j = 0..n, evaluated at x.
Rational lagrange(const std::vector<Rational>& values, const Rational& x) {
  Rational sum = 0;
  const std::size_t m = values.size();
  for (std::size_t i = 0; i < m; ++i) {
    Rational term = values[i];
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) term *= (x - Rational(k)) / (Rational(i) - Rational(k));
    sum += term;
  }
  return sum;
}

std::vector<Polytope> test_polytopes() {
  std::vector<Polytope> out;
  for (const auto& v : fixtures::test_varieties()) out.push_back(polytope_from_bundle(v.fan, v.phi));
  out.push_back(polytope_from_bundle(fixtures::p3_fan(), fixtures::ones(fixtures::p3_fan())));
  out.push_back(Polytope::hull(std::vector<LatticeVector>{{0, 0}, {2, 0}, {0, 1}, {3, 3}}));
  return out;
}

}  // namespace

TEST(Number, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(format_rational(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(format_rational(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("1.5"), Error);
  EXPECT_THROW(parse_rational(""), Error);
  EXPECT_EQ(tropmirror::floor(Rational(-1, 2)), -1);
  EXPECT_EQ(tropmirror::ceil(Rational(-1, 2)), 0);
  EXPECT_EQ(tropmirror::ceil(Rational(7, 2)), 4);
}

TEST(IsSmooth, Examples) {
  EXPECT_TRUE(is_smooth(fixtures::p2_fan()));
  EXPECT_FALSE(is_smooth(Fan({{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}})));
  EXPECT_TRUE(is_smooth(fixtures::p1_fan()));
}

TEST(IsSmooth, DeterminantOracle) {
  // Plain 2x2 determinants, independent of the rational elimination.
  const Fan weighted({{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<long> dets;
  for (const auto& c : weighted.max_cones()) {
    const auto& a = weighted.rays()[c[0]];
    const auto& b = weighted.rays()[c[1]];
    dets.push_back(static_cast<long>(a[0] * b[1] - a[1] * b[0]));
  }
  EXPECT_EQ(dets, (std::vector<long>{1, 1, -2}));
}

TEST(IsSmooth, WrongConeSizeIsMalformed) {
  const Fan bad({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1}});
  try {
    is_smooth(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedFan);
  }
}

TEST(IsSmooth, InvariantUnderRelabelAndUnimodular) {
  std::mt19937_64 rng(7);
  const std::vector<Fan> fans = {fixtures::p2_fan(), fixtures::f1_fan(),
                                 Fan({{1, 0}, {0, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}})};
  const std::vector<std::vector<LatticeVector>> unimodular = {
      {{1, 1}, {0, 1}}, {{2, 1}, {1, 1}}, {{0, -1}, {1, 0}}, {{1, 0}, {3, 1}}};
  for (const auto& f : fans) {
    const bool base = is_smooth(f);
    std::vector<std::size_t> perm(f.rays().size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<LatticeVector> rays(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) rays[perm[i]] = f.rays()[i];
    std::vector<Cone> cones;
    for (auto c : f.max_cones()) {
      for (auto& i : c) i = perm[i];
      cones.push_back(c);
    }
    EXPECT_EQ(is_smooth(Fan(rays, cones)), base);
    for (const auto& g : unimodular) EXPECT_EQ(is_smooth(f.transformed(g)), base);
  }
}

TEST(Fan, RejectsNonPrimitiveRay) { EXPECT_THROW(Fan({{2, 0}, {0, 1}}, {{0, 1}}), Error); }

TEST(Fan, Completeness) {
  EXPECT_TRUE(is_complete(fixtures::p2_fan()));
  EXPECT_TRUE(is_complete(fixtures::p3_fan()));
  EXPECT_TRUE(is_complete(fixtures::p1_fan()));
  EXPECT_FALSE(is_complete(Fan({{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}})));
  EXPECT_FALSE(is_complete(Fan({{1}}, {{0}})));
}

TEST(PolytopeFromBundle, P2Triangle) {
  const Polytope q = polytope_from_bundle(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan()));
  // Oracle: Cramer's rule on each pair of the three inequalities.
  const long a[3][2] = {{1, 0}, {0, 1}, {-1, -1}};
  std::vector<RationalVector> expected;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      const long det = a[i][0] * a[j][1] - a[i][1] * a[j][0];
      expected.push_back(rv({Rational(a[j][1] - a[i][1]) / det, Rational(a[i][0] - a[j][0]) / det}));
    }
  EXPECT_EQ(q.vertices(), sorted_vertices(expected));
  EXPECT_EQ(q.vertices(), sorted_vertices({rv({1, 1}), rv({1, -2}), rv({-2, 1})}));
  EXPECT_FALSE(q.lower_dimensional());
  EXPECT_TRUE(q.contains_origin());
}

TEST(PolytopeFromBundle, P1Segment) {
  const Polytope q = polytope_from_bundle(fixtures::p1_fan(), fixtures::ones(fixtures::p1_fan()));
  EXPECT_EQ(q.vertices(), (std::vector<RationalVector>{rv({-1}), rv({1})}));
  ASSERT_EQ(q.hrep().size(), 2u);
}

TEST(PolytopeFromBundle, ZeroSupportIsPoint) {
  const Polytope q = polytope_from_bundle(fixtures::p2_fan(), {{0, 0, 0}});
  EXPECT_EQ(q.vertices(), (std::vector<RationalVector>{rv({0, 0})}));
  EXPECT_TRUE(q.lower_dimensional());
  EXPECT_EQ(q.dim(), 0u);
}

TEST(PolytopeFromBundle, F1Quadrilateral) {
  const Polytope q = polytope_from_bundle(fixtures::f1_fan(), fixtures::ones(fixtures::f1_fan()));
  EXPECT_EQ(q.vertices(), sorted_vertices({rv({1, 1}), rv({0, 1}), rv({-2, -1}), rv({1, -1})}));
}

TEST(PolytopeFromBundle, NonConvexNamesConePair) {
  try {
    polytope_from_bundle(fixtures::p1xp1_fan(), {{1, 1, 1, -3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConvex);
    EXPECT_NE(std::string(e.what()).find("cone {"), std::string::npos);
  }
}

TEST(PolytopeFromBundle, IncompleteFanIsUnbounded) {
  try {
    polytope_from_bundle(Fan({{1, 0}, {0, 1}}, {{0, 1}}), {{1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unbounded);
  }
}

TEST(LatticePoints, P2Triangle) {
  const Polytope q = polytope_from_bundle(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan()));
  const auto pts = lattice_points(q, 1);
  // Oracle: scan with the defining inequalities written out by hand.
  std::vector<RationalVector> expected;
  for (long x = -3; x <= 3; ++x)
    for (long y = -3; y <= 3; ++y)
      if (x <= 1 && y <= 1 && -x - y <= 1) expected.push_back(rv({x, y}));
  EXPECT_EQ(pts.size(), 10u);
  EXPECT_EQ(pts, expected);
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
}

TEST(LatticePoints, SegmentHalfSteps) {
  const Polytope q = polytope_from_bundle(fixtures::p1_fan(), fixtures::ones(fixtures::p1_fan()));
  EXPECT_EQ(lattice_points(q, 2), (std::vector<RationalVector>{rv({-1}), rv({Rational(-1, 2)}), rv({0}),
                                                              rv({Rational(1, 2)}), rv({1})}));
}

TEST(LatticePoints, PointPolytope) {
  const Polytope q = Polytope::hull(std::vector<RationalVector>{rv({0, 0})});
  for (int d = 1; d <= 4; ++d) EXPECT_EQ(lattice_points(q, d), (std::vector<RationalVector>{rv({0, 0})}));
}

TEST(InteriorLatticePoints, Examples) {
  const Polytope tri = polytope_from_bundle(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan()));
  EXPECT_EQ(interior_lattice_points(tri, 1), (std::vector<RationalVector>{rv({0, 0})}));
  const Polytope square = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(interior_lattice_points(square, 1).empty());
  EXPECT_EQ(interior_lattice_points(square, 2), (std::vector<RationalVector>{rv({Rational(1, 2), Rational(1, 2)})}));
  const Polytope seg = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {2, 0}});
  try {
    interior_lattice_points(seg, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LowerDimensional);
  }
}

TEST(Hull, QuadrilateralMatchesGiftWrap) {
  const std::vector<std::pair<long, long>> pts = {{0, 0}, {1, 0}, {0, 1}, {-1, -1}};
  const Polytope p = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {1, 0}, {0, 1}, {-1, -1}});
  std::vector<RationalVector> oracle;
  for (auto [x, y] : gift_wrap(pts)) oracle.push_back(rv({x, y}));
  EXPECT_EQ(p.vertices(), sorted_vertices(oracle));
  EXPECT_EQ(p.vertices().size(), 3u);
}

TEST(Hull, RandomPointSetsMatchGiftWrap) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<std::pair<long, long>> pts;
    std::vector<LatticeVector> lv;
    for (int i = 0; i < 9; ++i) {
      const long x = c(rng), y = c(rng);
      pts.emplace_back(x, y);
      lv.push_back({x, y});
    }
    const Polytope p = Polytope::hull(lv);
    if (p.lower_dimensional()) continue;
    std::vector<RationalVector> oracle;
    for (auto [x, y] : gift_wrap(pts)) oracle.push_back(rv({x, y}));
    EXPECT_EQ(p.vertices(), sorted_vertices(oracle));
    EXPECT_EQ(p.hrep().size(), p.vertices().size());
  }
}

TEST(Hull, PointAndCollinear) {
  const Polytope pt = Polytope::hull(std::vector<RationalVector>{rv({0, 0})});
  EXPECT_EQ(pt.dim(), 0u);
  EXPECT_TRUE(pt.lower_dimensional());
  const Polytope seg = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {1, 0}, {2, 0}});
  EXPECT_EQ(seg.vertices(), (std::vector<RationalVector>{rv({0, 0}), rv({2, 0})}));
  EXPECT_TRUE(seg.lower_dimensional());
  EXPECT_EQ(seg.dim(), 1u);
  EXPECT_TRUE(seg.contains(rv({1, 0})));
  EXPECT_FALSE(seg.contains(rv({1, Rational(1, 3)})));
}

TEST(Hull, CanonicalNormals) {
  const Polytope p = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {4, 0}, {0, 2}});
  for (const auto& h : p.hrep()) EXPECT_TRUE(is_primitive(h.normal));
  const Polytope seg = Polytope::hull(std::vector<LatticeVector>{{0, 0}, {2, 2}});
  // Equality pair: first normal with positive leading coordinate must appear.
  bool saw_positive_lex = false;
  for (const auto& h : seg.hrep())
    if (h.normal == LatticeVector{1, -1} && h.bound == 0) saw_positive_lex = true;
  EXPECT_TRUE(saw_positive_lex);
}

TEST(Polytope, RoundTripMembership) {
  std::mt19937_64 rng(2024);
  std::vector<Polytope> polys = test_polytopes();
  polys.push_back(Polytope::hull(std::vector<LatticeVector>{{0, 0}, {1, 0}, {2, 0}}));
  polys.push_back(Polytope::hull(std::vector<LatticeVector>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
  for (const auto& q : polys) {
    int agree = 0;
    for (int i = 0; i < 1000; ++i) {
      RationalVector y = random_rational(rng, q.ambient_dim(), 3, 4);
      if (i % 4 == 0) y = q.vertices()[i % q.vertices().size()];  // exercise the boundary
      agree += q.contains(y) == vrep_contains(q, y);
    }
    EXPECT_EQ(agree, 1000);
  }
}

TEST(Polytope, FromInequalitiesRoundTrip) {
  for (const auto& q : test_polytopes()) EXPECT_EQ(Polytope::from_inequalities(q.hrep(), q.ambient_dim()), q);
}

TEST(Polytope, DilationConsistency) {
  for (const auto& q : test_polytopes())
    for (int j = 1; j <= 8; ++j) EXPECT_EQ(count_dilate(q, j), count_refine(q, j)) << "j=" << j;
}

TEST(Polytope, EhrhartReciprocity) {
  for (const auto& q : test_polytopes()) {
    if (!q.is_lattice_polytope()) continue;
    const std::size_t n = q.ambient_dim();
    std::vector<Rational> values;
    for (std::size_t j = 0; j <= n; ++j)
      values.push_back(j == 0 ? Rational(1) : Rational(count_dilate(q, j)));
    for (int j = 1; j <= 4; ++j) {
      const Rational lhs = (n % 2 ? Rational(-1) : Rational(1)) * lagrange(values, Rational(-j));
      EXPECT_EQ(lhs, Rational(interior_lattice_points(q.dilate(j), 1).size()));
      EXPECT_EQ(lagrange(values, Rational(j)), Rational(count_dilate(q, j)));
    }
  }
}

TEST(Linalg, NullspaceAndSolve) {
  linalg::Matrix m = {{1, 2, 3}, {2, 4, 6}};
  const auto ns = linalg::nullspace(m, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(dot(RationalVector(std::vector<Rational>{1, 2, 3}), v), 0);
  EXPECT_EQ(linalg::rank(m), 1u);
  EXPECT_FALSE(linalg::solve({{1, 2}, {2, 4}}, {1, 1}).has_value());
  EXPECT_EQ(linalg::determinant({{2, 1}, {1, 1}}), 1);
}
