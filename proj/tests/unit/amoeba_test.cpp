#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "fixtures.hpp"
#include "tropmirror/amoeba/certificates.hpp"
#include "tropmirror/amoeba/lift.hpp"
#include "tropmirror/amoeba/sampler.hpp"
#include "tropmirror/error.hpp"
#include "tropmirror/tropical/constants.hpp"
#include "tropmirror/tropical/hausdorff.hpp"

using namespace tropmirror;
using namespace tropmirror::amoeba;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

PatchworkFamily p2_family(double log_t, double s, double eps = 0.1) {
  return PatchworkFamily::from_fan(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan()), log_t, s, eps);
}

// −1 + z₁ + z₂ with ν ≡ 0.
PatchworkFamily line_family() {
  tropical::HeightFunction h{{LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 1}},
                             {Rational(0), Rational(0), Rational(0)}};
  return PatchworkFamily(h, 1.0, 0.0, 0.1, {-1.0, 1.0, 1.0});
}

TorusPoint at(double u1, double th1, double u2, double th2) {
  return TorusPoint{{Complex(u1, th1), Complex(u2, th2)}};
}

std::vector<double> p2_log_scale_and_rho(double eps, double* rho = nullptr) {
  const auto k = tropical::tropical_constants(
      tropical::height_from_bundle(fixtures::p2_fan(), fixtures::ones(fixtures::p2_fan())));
  if (rho) *rho = k.rho;
  return {tropical::choose_log_scale(k, eps), k.c_est};
}

// Distance from x to the boundary of a convex polygon given by its vertices.
double distance_to_polygon_boundary(const std::vector<RationalVector>& verts, const std::vector<double>& x) {
  std::vector<std::array<double, 2>> v;
  double cx = 0, cy = 0;
  for (const auto& p : verts) {
    v.push_back({to_double(p[0]), to_double(p[1])});
    cx += v.back()[0];
    cy += v.back()[1];
  }
  cx /= double(v.size());
  cy /= double(v.size());
  std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
  });
  double best = 1e300;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    double s = ((x[0] - a[0]) * dx + (x[1] - a[1]) * dy) / (dx * dx + dy * dy);
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, std::hypot(x[0] - a[0] - s * dx, x[1] - a[1] - s * dy));
  }
  return best;
}

}  // namespace

TEST(MirrorPotential, ProjectivePlane) {
  const auto w = mirror_potential(fixtures::p2_fan());
  ASSERT_EQ(w.terms().size(), 4u);
  EXPECT_EQ(w.terms()[0].exponent, (LatticeVector{0, 0}));
  EXPECT_EQ(w.terms()[0].coefficient, Complex(-1));
  EXPECT_EQ(w.terms()[3].exponent, (LatticeVector{-1, -1}));
  const std::vector<Complex> z{Complex(0.3, 1.1), Complex(-2.0, 0.4)};
  const Complex hand = -1.0 + z[0] + z[1] + 1.0 / (z[0] * z[1]);
  EXPECT_LT(std::abs(w(z) - hand), 1e-14);
}

TEST(MirrorPotential, LineAndQuadric) {
  const auto p1 = mirror_potential(fixtures::p1_fan());
  const Complex z(0.7, -0.2);
  EXPECT_LT(std::abs(p1({z}) - (-1.0 + z + 1.0 / z)), 1e-14);
  EXPECT_EQ(mirror_potential(fixtures::p1xp1_fan()).terms().size(), 5u);
}

TEST(Laurent, RepeatedExponentRejected) {
  EXPECT_THROW(LaurentPolynomial({{LatticeVector{1, 0}, 1.0}, {LatticeVector{1, 0}, 2.0}}), Error);
}

TEST(Laurent, NewtonPolytopeOfMirror) {
  EXPECT_EQ(mirror_potential(fixtures::p2_fan()).newton_polytope().vertices().size(), 3u);
}

TEST(Cutoff, EndpointsAndMidpoint) {
  const double eps = 0.1, L = 8;
  const auto p = CutoffProfile::for_scale(eps, L);
  EXPECT_EQ(cutoff(p.inner, p).value, 0.0);
  EXPECT_EQ(cutoff(p.inner, p).derivative, 0.0);
  EXPECT_EQ(cutoff(p.outer, p).value, 1.0);
  EXPECT_EQ(cutoff(p.outer, p).derivative, 0.0);
  const auto mid = cutoff((p.inner + p.outer) / 2, p);
  EXPECT_DOUBLE_EQ(mid.value, 0.5);
  EXPECT_DOUBLE_EQ(mid.derivative, 3 / (eps * L));
}

TEST(Cutoff, DerivativeBoundOverManySamples) {
  std::mt19937_64 rng(11);
  const double eps = 0.1, L = 12;
  const auto p = CutoffProfile::for_scale(eps, L);
  std::uniform_real_distribution<double> d(0, 2 * p.outer);
  double worst = 0, last = -1;
  std::vector<double> ds(100000);
  for (auto& x : ds) x = d(rng);
  std::sort(ds.begin(), ds.end());
  for (double x : ds) {
    const auto c = cutoff(x, p);
    worst = std::max(worst, std::abs(c.derivative));
    EXPECT_GE(c.value, last);
    last = c.value;
  }
  EXPECT_LE(worst, 3 / (eps * L));
  EXPECT_LT(worst, 4 / (eps * L));
}

TEST(Cutoff, GradientInLogCoordinates) {
  const double eps = 0.1, L = 20;
  const auto f = p2_family(L, 1.0, eps);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3 * L, 3 * L);
  double euclid = 0, l1 = 0;
  std::vector<double> g;
  for (int i = 0; i < 20000; ++i) {
    const std::vector<double> p{u(rng), u(rng)};
    for (std::size_t a = 0; a < f.size(); ++a) {
      f.phi(a, p, &g);
      euclid = std::max(euclid, std::hypot(g[0], g[1]));
      l1 = std::max(l1, std::abs(g[0]) + std::abs(g[1]));
    }
  }
  EXPECT_LE(euclid, 3 / (eps * L) * (1 + 1e-12));
  EXPECT_LE(l1, 3 * std::sqrt(2.0) / (eps * L) * (1 + 1e-12));
  RecordProperty("max_l1_gradient_times_eps_log_t", std::to_string(l1 * eps * L));
}

TEST(EvalFamily, HolomorphicAtZeroS) {
  const auto f = p2_family(4, 0);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-12, 12), th(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    const auto v = eval_family(f, at(u(rng), th(rng), u(rng), th(rng)));
    for (const auto& c : v.delbar) EXPECT_EQ(c, Complex(0));
  }
}

TEST(EvalFamily, MatchesCentralDifferences) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> logt(1, 4), s01(0, 1), ep(0.1, 0.5), th(-kPi, kPi);
  const double h = 1e-6;
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = p2_family(logt(rng), s01(rng), ep(rng));
    std::uniform_real_distribution<double> u(-3 * f.log_t(), 3 * f.log_t());
    for (int i = 0; i < 100; ++i) {
      const TorusPoint p = at(u(rng), th(rng), u(rng), th(rng));
      const auto v = eval_family(f, p);
      auto shifted = [&](std::size_t j, Complex dw) {
        TorusPoint q = p;
        q.w[j] += dw;
        const auto e = eval_family(f, q);
        return e.value * std::exp(e.log_scale - v.log_scale);
      };
      double scale = 1;
      for (std::size_t j = 0; j < 2; ++j) scale = std::max({scale, std::abs(v.del[j]), std::abs(v.delbar[j])});
      for (std::size_t j = 0; j < 2; ++j) {
        const Complex fa = (shifted(j, h) - shifted(j, -h)) / (2 * h);
        const Complex fb = (shifted(j, Complex(0, h)) - shifted(j, Complex(0, -h))) / (2 * h);
        const Complex del = (fa - Complex(0, 1) * fb) / 2.0;
        const Complex delbar = (fa + Complex(0, 1) * fb) / 2.0;
        EXPECT_LT(std::abs(del - v.del[j]) / scale, 1e-5);
        EXPECT_LT(std::abs(delbar - v.delbar[j]) / scale, 1e-5);
      }
    }
  }
}

TEST(EvalFamily, SurvivingTermsOnAnEdge) {
  // u on the wall between C_0 and C_{(1,0)}, far from the other components.
  const double L = 30;
  const auto f = p2_family(L, 1.0);
  const TorusPoint p = at(L, 0.7, -L / 2, -1.3);
  const auto v = eval_family(f, p);
  EXPECT_EQ(v.phi[2], 1.0);
  EXPECT_EQ(v.phi[3], 1.0);
  EXPECT_EQ(v.phi[0], 0.0);
  EXPECT_EQ(v.phi[1], 0.0);
  const Complex hand = -1.0 + std::exp(Complex(L, 0.7) - L);
  EXPECT_LT(std::abs(v.value * std::exp(v.log_scale) - hand), 1e-12);
}

TEST(Lopsided, DominantMonomials) {
  const auto f = p2_family(1.0, 0.0);
  EXPECT_EQ(lopsided_certificate(f, {10, 0}), std::optional<std::size_t>(1));
  EXPECT_EQ(lopsided_certificate(p2_family(8, 1.0), {0, 0}), std::optional<std::size_t>(0));
}

TEST(Fiber, LinearFiberByHand) {
  const auto f = line_family();
  bool degenerate = true;
  const auto roots = fiber_roots(f, 0, Complex(0, kPi), &degenerate);
  EXPECT_FALSE(degenerate);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_NEAR(roots[0].log_modulus()[0], 0, 1e-12);
  EXPECT_NEAR(roots[0].log_modulus()[1], std::log(2.0), 1e-10);
  // z₁ = 1 forces z₂ = 0, outside the torus.
  EXPECT_TRUE(fiber_roots(f, 0, Complex(0, 0), &degenerate).empty());
  EXPECT_FALSE(degenerate);
}

TEST(Fiber, DegenerateFiberReported) {
  // (z₁ − 1)(z₂ + 1) vanishes on the whole fiber z₁ = 1.
  tropical::HeightFunction h{{LatticeVector{0, 0}, LatticeVector{1, 0}, LatticeVector{0, 1}, LatticeVector{1, 1}},
                             {Rational(0), Rational(0), Rational(0), Rational(0)}};
  PatchworkFamily f(h, 1.0, 0.0, 0.1, {-1.0, 1.0, -1.0, 1.0});
  bool degenerate = false;
  EXPECT_TRUE(fiber_roots(f, 0, Complex(0, 0), &degenerate).empty());
  EXPECT_TRUE(degenerate);
  fiber_roots(f, 0, Complex(0.5, 0), &degenerate);
  EXPECT_FALSE(degenerate);
}

TEST(Sampler, LineResidualsAndTentacles) {
  const auto cloud = amoeba_sample_curve(line_family(), {60, 32, {-8, -8}, {8, 8}});
  ASSERT_GT(cloud.points.size(), 100u);
  for (const auto& p : cloud.points) EXPECT_LT(p.residual, 1e-8);
  for (const auto& target : std::vector<std::vector<double>>{{-5, 0}, {0, -5}, {5, 5}}) {
    double best = 1e9;
    for (const auto& p : cloud.points) best = std::min(best, std::hypot(p.u[0] - target[0], p.u[1] - target[1]));
    EXPECT_LT(best, 1.0);
  }
}

TEST(Sampler, DeterministicAndRejectsOtherDimensions) {
  const auto f = p2_family(4, 0.5);
  const SampleGrid g{12, 8, {-12, -12}, {12, 12}};
  const auto a = amoeba_sample_curve(f, g);
  const auto b = amoeba_sample_curve(f, g);
  ASSERT_EQ(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i) EXPECT_EQ(a.points[i].u, b.points[i].u);
  const auto p1 = PatchworkFamily::from_fan(fixtures::p1_fan(), fixtures::ones(fixtures::p1_fan()), 2, 0, 0.1);
  EXPECT_THROW(amoeba_sample_curve(p1, g), Error);
}

TEST(Sampler, NoEmittedPointIsLopsided) {
  for (double s : {0.0, 0.5, 1.0}) {
    const auto f = p2_family(4, s);
    const auto cloud = amoeba_sample_curve(f, {40, 16, {-14, -14}, {14, 14}});
    ASSERT_GT(cloud.points.size(), 0u);
    for (const auto& p : cloud.points) {
      EXPECT_LT(p.residual, 1e-8);
      EXPECT_FALSE(lopsided_certificate(f, p.u).has_value());
    }
  }
}

TEST(Lopsided, FarFromTropicalCurveAtChosenScale) {
  const double eps = 0.1;
  const double L = p2_log_scale_and_rho(eps)[0];
  const auto f = p2_family(L, 1.0, eps);
  std::size_t far = 0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      const std::vector<double> u{(-3 + 6.0 * i / 40) * L, (-3 + 6.0 * j / 40) * L};
      const double d = tropical::distance_to_complex(f.complex(), {u[0] / L, u[1] / L}) * L;
      if (d < eps * L) continue;
      ++far;
      EXPECT_TRUE(lopsided_certificate(f, u).has_value());
    }
  EXPECT_GT(far, 1000u);
}

TEST(SymplecticMargin, OffLocusRejected) {
  EXPECT_THROW(symplectic_margin(p2_family(4, 0), at(0, 0, 0, 0)), Error);
}

TEST(SymplecticMargin, HolomorphicMarginIsGradientNorm) {
  const auto f = p2_family(4, 0);
  const auto cloud = amoeba_sample_curve(f, {10, 8, {-12, -12}, {12, 12}});
  ASSERT_GT(cloud.points.size(), 0u);
  for (const auto& p : cloud.points) {
    const auto v = eval_family(f, p.witness);
    EXPECT_DOUBLE_EQ(symplectic_margin(f, p.witness), v.del_norm());
    EXPECT_GT(v.del_norm(), 0);
  }
}

TEST(SymplecticMargin, PositiveAtChosenScale) {
  const double eps = 0.1;
  double rho = 1;
  const double L = p2_log_scale_and_rho(eps, &rho)[0];
  for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const auto f = p2_family(L, s, eps);
    const auto cloud = amoeba_sample_curve(f, {24, 8, {-3 * L, -3 * L}, {3 * L, 3 * L}});
    ASSERT_GT(cloud.points.size(), 50u) << s;
    for (const auto& p : cloud.points) {
      const auto v = eval_family(f, p.witness);
      EXPECT_GT(symplectic_margin(f, p.witness), 0) << s;
      // |∂f| against the dominant monomial over 10ρ
      EXPECT_GT(v.del_norm(), 1 / (10 * rho)) << s;
    }
  }
}

TEST(SymplecticMargin, SmallScaleScanIsRecorded) {
  const auto f = p2_family(std::log(1.5), 1.0);
  const auto cloud = amoeba_sample_curve(f, {16, 8, {-4, -4}, {4, 4}});
  std::size_t negative = 0;
  for (const auto& p : cloud.points) negative += symplectic_margin(f, p.witness) <= 0 ? 1 : 0;
  RecordProperty("negative_margins", static_cast<int>(negative));
  RecordProperty("witnesses", static_cast<int>(cloud.points.size()));
}

TEST(Localization, SurvivorsLieInOneCell) {
  const double eps = 0.1;
  const double L = p2_log_scale_and_rho(eps)[0];
  const auto f = p2_family(L, 1.0, eps);
  const auto& faces = f.complex().subdivision.faces;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.5 * L, 2.5 * L);
  for (int i = 0; i < 2000; ++i) {
    const std::vector<double> x{u(rng), u(rng)};
    TorusPoint p{{Complex(x[0], 0.3), Complex(x[1], -0.2)}};
    const auto v = eval_family(f, p);
    std::vector<std::size_t> alive;
    for (std::size_t a = 0; a < f.size(); ++a)
      if (v.phi[a] < 1) alive.push_back(a);
    ASSERT_FALSE(alive.empty());
    bool inside = false;
    for (const auto& c : faces)
      inside = inside || std::includes(c.points.begin(), c.points.end(), alive.begin(), alive.end());
    EXPECT_TRUE(inside);
  }
}

TEST(ExponentialDecay, NoViolationsAtE8) {
  const double eps = 0.1;
  const double c = p2_log_scale_and_rho(eps)[1];
  const auto report = exponential_decay_check(p2_family(8, 1.0, eps), c, 1000, 7);
  EXPECT_EQ(report.samples, 1000u);
  EXPECT_GT(report.checked, 0u);
  EXPECT_EQ(report.violations, 0u);
}

TEST(ExponentialDecay, RatioFallsAlongNormal) {
  const auto f = p2_family(8, 0);
  // recede from the wall between C_0 and C_{(1,0)} into C_0
  double prev = 1e300;
  for (int k = 0; k < 10; ++k) {
    const double r = log_ratio(f, 1, 0, {8.0 - k, -2.0});
    EXPECT_LT(r, prev);
    prev = r;
  }
}

TEST(BoundarySphere, CurveHugsBoundaryOfQ) {
  const double eps = 0.1, L = 12;
  const auto f = p2_family(L, 0, eps);
  const auto sphere = boundary_sphere_sample(f, 180);
  EXPECT_EQ(sphere.missing, 0u);
  const auto curve = sphere.curve();
  ASSERT_EQ(curve.size(), 180u);
  const auto& q = *f.complex().moment_polytope;
  for (const auto& p : curve) EXPECT_LT(distance_to_polygon_boundary(q.vertices(), {p[0] / L, p[1] / L}), eps);
  EXPECT_EQ(winding_number(curve), 1);
  TorusPoint origin{{Complex(0), Complex(0)}};
  EXPECT_LT(eval_family(f, origin).value.real(), 0);
}

TEST(HorizontalLift, IdentityMap) {
  const LaurentPolynomial f({{LatticeVector{1}, 1.0}});
  const auto v = horizontal_lift(f, {Complex(1)}, Complex(1));
  EXPECT_NEAR(v.components[0].real(), 1, 1e-15);
  EXPECT_NEAR(v.components[0].imag(), 0, 1e-15);
}

TEST(HorizontalLift, PushforwardOrthogonalityAndGradientOracle) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> ex(-2, 2);
  std::uniform_real_distribution<double> re(-1, 1), lr(std::log(0.5), std::log(2.0)), th(-kPi, kPi);
  for (int poly = 0; poly < 5; ++poly) {
    std::vector<Term> terms;
    std::set<LatticeVector> used;
    while (terms.size() < 5) {
      LatticeVector e{ex(rng), ex(rng)};
      if (used.insert(e).second) terms.push_back({e, Complex(re(rng), re(rng))});
    }
    const LaurentPolynomial f(terms);
    for (int i = 0; i < 100; ++i) {
      const std::vector<Complex> z{std::polar(std::exp(lr(rng)), th(rng)), std::polar(std::exp(lr(rng)), th(rng))};
      const Complex a(re(rng), re(rng));
      const auto v = horizontal_lift(f, z, a);
      EXPECT_LT(std::abs(pushforward(f, v) - a) / std::abs(a), 1e-8);

      const auto g = f.gradient(z);
      double denom = 0;
      for (std::size_t k = 0; k < 2; ++k) denom += std::norm(g[k]) * std::norm(z[k]);
      for (std::size_t k = 0; k < 2; ++k) {
        const Complex oracle = a * std::conj(g[k]) * std::norm(z[k]) / denom;
        EXPECT_LT(std::abs(v.components[k] - oracle), 1e-10 * (1 + std::abs(oracle)));
      }

      Eigen::MatrixXd jac(2, 4);
      for (std::size_t k = 0; k < 2; ++k) {
        jac(0, 2 * k) = g[k].real();
        jac(0, 2 * k + 1) = -g[k].imag();
        jac(1, 2 * k) = g[k].imag();
        jac(1, 2 * k + 1) = g[k].real();
      }
      const Eigen::MatrixXd ker = Eigen::FullPivLU<Eigen::MatrixXd>(jac).kernel();
      ASSERT_EQ(ker.cols(), 2);
      for (Eigen::Index c = 0; c < ker.cols(); ++c) {
        const std::vector<Complex> k{Complex(ker(0, c), ker(1, c)), Complex(ker(2, c), ker(3, c))};
        TangentVectorC kv{z, k};
        EXPECT_LT(std::abs(omega(z, v.components, k)) / (v.norm() * kv.norm()), 1e-8);
      }
    }
  }
}

TEST(HorizontalLift, CriticalPoint) {
  const LaurentPolynomial f({{LatticeVector{1}, 1.0}, {LatticeVector{-1}, 1.0}});
  EXPECT_THROW(horizontal_lift(f, {Complex(1)}, Complex(1)), Error);
}

TEST(BoundarySphere, CornerErrorAtSmallScale) {
  // Near a vertex of Q two monomials tie with the constant term, so the zero
  // sits log 2 inside the corner; after rescaling this is log 2 / log t.
  const double L = 4;
  const auto f = p2_family(L, 0);
  const auto curve = boundary_sphere_sample(f, 360).curve();
  const auto& q = *f.complex().moment_polytope;
  double worst = 0;
  for (const auto& p : curve) worst = std::max(worst, distance_to_polygon_boundary(q.vertices(), {p[0] / L, p[1] / L}));
  EXPECT_NEAR(worst, std::log(2.0) / L, 1e-2);
  EXPECT_GT(worst, 0.1);
}
