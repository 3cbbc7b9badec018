#include "tropmirror/coordring/ring.hpp"

#include <algorithm>
#include <set>

#include "tropmirror/diagnostics.hpp"
#include "tropmirror/error.hpp"

namespace tropmirror::coordring {
namespace {

std::vector<LatticeVector> dilate_points(const Polytope& q, long j) {
  if (j == 0) return {LatticeVector(q.ambient_dim())};
  std::vector<LatticeVector> out;
  for (const auto& p : lattice_points(q.dilate(Rational(j)), Integer(1))) out.push_back(to_lattice(p));
  return out;
}

LatticeVector phi(long j, const RationalVector& p) {
  const RationalVector s = Rational(j) * p;
  if (!is_integral(s)) throw Error(ErrorCode::InvalidArgument, "Φ image " + to_string(s) + " is not integral");
  return to_lattice(s);
}

RationalVector shrink(const LatticeVector& m, long j) { return to_rational(m) * (Rational(1) / Rational(j)); }

}  // namespace

SectionRing::SectionRing(Polytope q, long max_degree, std::vector<std::vector<LatticeVector>> basis)
    : q_(std::move(q)), max_degree_(max_degree), basis_(std::move(basis)) {
  for (auto& b : basis_) {
    std::sort(b.begin(), b.end());
    std::map<LatticeVector, std::size_t> idx;
    for (std::size_t i = 0; i < b.size(); ++i) idx.emplace(b[i], i);
    index_.push_back(std::move(idx));
  }
}

std::size_t SectionRing::index_of(long j, const LatticeVector& m) const {
  const auto& idx = index_.at(static_cast<std::size_t>(j));
  const auto it = idx.find(m);
  return it == idx.end() ? dim(j) : it->second;
}

std::size_t SectionRing::product(long j, std::size_t p, long k, std::size_t q) const {
  if (j + k > max_degree_) return truncated;
  const std::size_t r = index_of(j + k, basis(j)[p] + basis(k)[q]);
  if (r == dim(j + k)) throw Error(ErrorCode::InvalidArgument, "sum of sections left (j+k)Q");
  return r;
}

SectionRing section_ring(const Polytope& q, long max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  if (!q.is_lattice_polytope()) warn("NonLatticePolytope: ring built from lattice points of the dilates");
  std::vector<std::vector<LatticeVector>> basis;
  for (long j = 0; j <= max_degree; ++j) basis.push_back(dilate_points(q, j));
  return SectionRing(q, max_degree, std::move(basis));
}

std::vector<std::size_t> hilbert_function(const Polytope& q, long j_max) {
  if (j_max < 0) throw Error(ErrorCode::InvalidArgument, "j_max must be non-negative");
  std::vector<std::size_t> out;
  for (long j = 0; j <= j_max; ++j) out.push_back(dilate_points(q, j).size());
  return out;
}

std::vector<std::size_t> interior_counts(const Polytope& q, long j_max) {
  if (j_max < 0) throw Error(ErrorCode::InvalidArgument, "j_max must be non-negative");
  std::vector<std::size_t> out{0};
  for (long j = 1; j <= j_max; ++j) out.push_back(interior_lattice_points(q.dilate(Rational(j)), Integer(1)).size());
  return out;
}

Rational ehrhart_value(const Polytope& q, long j) {
  const long n = static_cast<long>(q.ambient_dim());
  const auto values = hilbert_function(q, n);
  Rational sum = 0;
  for (long i = 0; i <= n; ++i) {
    Rational term = Rational(static_cast<long>(values[static_cast<std::size_t>(i)]));
    for (long k = 0; k <= n; ++k)
      if (k != i) term *= Rational(j - k) / Rational(i - k);
    sum += term;
  }
  return sum;
}

bool IsomorphismReport::success() const {
  return mismatches.empty() && std::all_of(bijection_ok.begin(), bijection_ok.end(), [](bool b) { return b; });
}

IsomorphismReport verify_isomorphism(const floer::GradedAlgebra& alg, const SectionRing& ring) {
  if (!(alg.polytope() == ring.polytope()) || alg.max_twist() != ring.max_degree())
    throw Error(ErrorCode::InvalidArgument, "algebra and ring must share Q and J");
  const long J = alg.max_twist();
  IsomorphismReport rep;

  for (long j = 0; j <= J; ++j) {
    bool ok = alg.dim(j) == ring.dim(j);
    std::set<std::size_t> image;
    for (const auto& g : alg.piece(j).basis()) {
      const std::size_t r = ring.index_of(j, j == 0 ? LatticeVector(g.point.dim()) : phi(j, g.point));
      ok = ok && r < ring.dim(j) && image.insert(r).second;
    }
    rep.bijection_ok.push_back(ok && image.size() == ring.dim(j));
  }

  auto ring_index = [&](long j, std::size_t p) {
    const auto& g = alg.piece(j)[p];
    return ring.index_of(j, j == 0 ? LatticeVector(g.point.dim()) : phi(j, g.point));
  };
  for (long j = 0; j <= J; ++j)
    for (long k = 0; j + k <= J; ++k)
      for (std::size_t p = 0; p < alg.dim(j); ++p)
        for (std::size_t q = 0; q < alg.dim(k); ++q) {
          ++rep.products_checked;
          const std::size_t fr = alg.product(j, p, k, q);
          const std::size_t expected = ring.product(j, ring_index(j, p), k, ring_index(k, q));
          const std::size_t got = fr == floer::GradedAlgebra::zero ? ring.dim(j + k) : ring_index(j + k, fr);
          if (got != expected)
            rep.mismatches.push_back({j, k, p, q, got < ring.dim(j + k) ? to_string(ring.basis(j + k)[got]) : "0",
                                      to_string(ring.basis(j + k)[expected])});
        }

  const auto& q = alg.polytope();
  for (long l = 1; l <= J; ++l)
    for (long m = 1; l + m <= J; ++m) {
      const auto floer_side = floer::dual_products(alg, l, m);
      const std::set<std::array<std::size_t, 3>> have(floer_side.begin(), floer_side.end());
      const floer::FloerGroup source = floer::floer_group(q, 0, -(l + m));
      const floer::FloerGroup target = floer::floer_group(q, 0, -m);
      const Polytope mq = q.dilate(Rational(m));
      std::set<std::array<std::size_t, 3>> want;
      for (const auto& big_p : ring.basis(l))
        for (const auto& big_r : interior_lattice_points(q.dilate(Rational(l + m)), Integer(1))) {
          ++rep.dual_products_checked;
          const RationalVector qs = big_r - to_rational(big_p);
          if (!mq.contains_in_interior(qs)) continue;
          want.insert({alg.piece(l).index_of(shrink(big_p, l)), source.index_of(big_r * (Rational(1) / Rational(l + m))),
                       target.index_of(qs * (Rational(1) / Rational(m)))});
        }
      for (const auto& t : want)
        if (!have.count(t)) rep.mismatches.push_back({l, -m, t[0], t[1], "0", "dual " + std::to_string(t[2])});
      for (const auto& t : have)
        if (!want.count(t)) rep.mismatches.push_back({l, -m, t[0], t[1], "dual " + std::to_string(t[2]), "0"});
    }
  rep.notes.push_back(
      "transposed products checked only for HF0(L,L(l)) x HFn(L,L(-l-m)) -> HFn(L,L(-m)); other mixed-sign "
      "products use the same transpose rule unverified");
  return rep;
}

bool SerreReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const SerreRow& r) { return r.ok(); });
}

SerreReport serre_check(const Polytope& q, long j_max) {
  if (j_max < 1) throw Error(ErrorCode::InvalidArgument, "j_max must be at least 1");
  const auto interior = interior_counts(q, j_max);
  const long n = static_cast<long>(q.ambient_dim());
  SerreReport rep;
  for (long j = 1; j <= j_max; ++j) {
    SerreRow row;
    row.j = j;
    row.floer = floer::serre_dual_dimension(q, -j);
    row.interior = interior[static_cast<std::size_t>(j)];
    row.reciprocity = (n % 2 == 0 ? 1 : -1) * ehrhart_value(q, -j);
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace tropmirror::coordring
