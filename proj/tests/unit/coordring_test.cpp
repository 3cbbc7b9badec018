#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "tropmirror/coordring/ring.hpp"
#include "tropmirror/error.hpp"

using namespace tropmirror;
using namespace tropmirror::coordring;

namespace {

Polytope q_of(const fixtures::Variety& v) { return polytope_from_bundle(v.fan, v.phi); }
Polytope p2_q() { return polytope_from_bundle(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan())); }
Polytope p1_q() { return polytope_from_bundle(fixtures::p1_fan(), fixtures::ones(fixtures::p1_fan())); }

}  // namespace

TEST(SectionRing, LineBasesAndProduct) {
  const auto ring = section_ring(p1_q(), 2);
  EXPECT_EQ(ring.dim(1), 3u);
  EXPECT_EQ(ring.dim(2), 5u);
  EXPECT_EQ(ring.basis(1).front(), (LatticeVector{-1}));
  const auto one = ring.index_of(1, LatticeVector{1});
  EXPECT_EQ(ring.basis(2)[ring.product(1, one, 1, one)], (LatticeVector{2}));
  EXPECT_EQ(ring.product(1, one, 2, 0), SectionRing::truncated);
}

TEST(SectionRing, UnitAssociativityCommutativity) {
  const auto ring = section_ring(p2_q(), 3);
  EXPECT_EQ(ring.dim(2), 28u);
  for (long j = 0; j <= 3; ++j)
    for (std::size_t p = 0; p < ring.dim(j); ++p) EXPECT_EQ(ring.product(0, 0, j, p), p);
  for (std::size_t a = 0; a < ring.dim(1); ++a)
    for (std::size_t b = 0; b < ring.dim(1); ++b) {
      EXPECT_EQ(ring.product(1, a, 1, b), ring.product(1, b, 1, a));
      for (std::size_t c = 0; c < ring.dim(1); ++c)
        EXPECT_EQ(ring.product(2, ring.product(1, a, 1, b), 1, c), ring.product(1, a, 2, ring.product(1, b, 1, c)));
    }
}

TEST(Hilbert, ProjectivePlaneMatchesQuadratic) {
  const auto h = hilbert_function(p2_q(), 6);
  for (long j = 0; j <= 6; ++j) EXPECT_EQ(h[static_cast<std::size_t>(j)], static_cast<std::size_t>((9 * j * j + 9 * j + 2) / 2));
  for (long j = 0; j <= 6; ++j) EXPECT_EQ(ehrhart_value(p2_q(), j), Rational(static_cast<long>(h[static_cast<std::size_t>(j)])));
}

TEST(Hilbert, LineAndPoint) {
  EXPECT_EQ(hilbert_function(p1_q(), 3), (std::vector<std::size_t>{1, 3, 5, 7}));
  const auto point = Polytope::hull(std::vector<RationalVector>{RationalVector(2)});
  EXPECT_EQ(hilbert_function(point, 4), (std::vector<std::size_t>{1, 1, 1, 1, 1}));
}

TEST(Hilbert, InteriorColumn) {
  EXPECT_EQ(interior_counts(p2_q(), 3), (std::vector<std::size_t>{0, 1, 10, 28}));
}

TEST(Verify, ProjectivePlaneDegreeFour) {
  const auto q = p2_q();
  const auto rep = verify_isomorphism(floer::assemble_algebra(q, 4), section_ring(q, 4));
  EXPECT_TRUE(rep.success());
  const auto h = hilbert_function(q, 4);
  std::size_t want = 0;
  for (std::size_t j = 0; j <= 4; ++j)
    for (std::size_t k = 0; j + k <= 4; ++k) want += h[j] * h[k];
  EXPECT_EQ(rep.products_checked, want);
  EXPECT_GT(rep.dual_products_checked, 0u);
  EXPECT_FALSE(rep.notes.empty());
}

TEST(Verify, AllVarieties) {
  for (const auto& v : fixtures::test_varieties()) {
    const auto q = q_of(v);
    EXPECT_TRUE(verify_isomorphism(floer::assemble_algebra(q, 3), section_ring(q, 3)).success()) << v.name;
  }
}

TEST(Verify, OneFlippedConstantIsOneMismatch) {
  const auto q = p2_q();
  auto alg = floer::assemble_algebra(q, 3);
  const auto e = alg.entries(1, 2).front();
  alg.set_product(1, e[0], 2, e[1], (e[2] + 1) % alg.dim(3));
  const auto rep = verify_isomorphism(alg, section_ring(q, 3));
  EXPECT_FALSE(rep.success());
  EXPECT_EQ(rep.mismatches.size(), 1u);
}

TEST(Verify, DeterministicAndIdempotent) {
  const auto q = p2_q();
  const auto alg = floer::assemble_algebra(q, 3);
  const auto ring = section_ring(q, 3);
  const auto a = verify_isomorphism(alg, ring);
  const auto b = verify_isomorphism(alg, ring);
  EXPECT_EQ(a.products_checked, b.products_checked);
  EXPECT_EQ(a.bijection_ok, b.bijection_ok);
}

TEST(Verify, InvariantUnderUnimodularChange) {
  const std::vector<LatticeVector> m{{2, 1}, {1, 1}};
  for (const auto& v : fixtures::test_varieties()) {
    if (v.fan.dim() != 2) continue;
    const auto q = polytope_from_bundle(v.fan.transformed(m), v.phi);
    EXPECT_TRUE(verify_isomorphism(floer::assemble_algebra(q, 3), section_ring(q, 3)).success()) << v.name;
  }
}

TEST(Verify, MismatchedInputsRejected) {
  EXPECT_THROW(verify_isomorphism(floer::assemble_algebra(p2_q(), 2), section_ring(p2_q(), 3)), Error);
}

TEST(SerreCheck, Examples) {
  const auto p2 = serre_check(p2_q(), 4);
  EXPECT_TRUE(p2.ok());
  EXPECT_EQ(p2.rows[0].floer, 1u);
  EXPECT_EQ(p2.rows[0].interior, 1u);
  const auto p1 = serre_check(p1_q(), 2);
  EXPECT_EQ(p1.rows[1].interior, 3u);
  EXPECT_TRUE(p1.ok());
  for (const auto& v : fixtures::test_varieties()) EXPECT_TRUE(serre_check(q_of(v), 4).ok()) << v.name;
  EXPECT_THROW(serre_check(p2_q(), 0), Error);
}
