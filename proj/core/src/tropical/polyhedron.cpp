#include "tropmirror/tropical/polyhedron.hpp"

#include <limits>

#include "tropmirror/detail/subsets.hpp"

namespace tropmirror::tropical {
namespace {

Eigen::VectorXd row_of(const LatticeVector& a) {
  Eigen::VectorXd r(static_cast<Eigen::Index>(a.dim()));
  for (std::size_t i = 0; i < a.dim(); ++i) r[static_cast<Eigen::Index>(i)] = a[i].convert_to<double>();
  return r;
}

Eigen::Index rank_of(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return 0;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(1e-10);
  return lu.rank();
}

}  // namespace

FloatPolyhedron::FloatPolyhedron(std::size_t n, const std::vector<Halfspace>& equalities,
                                 const std::vector<Halfspace>& inequalities, double scale)
    : n_(n), empty_(false) {
  const auto N = static_cast<Eigen::Index>(n);
  // Independent subset of the equalities.
  Eigen::MatrixXd e(0, N);
  std::vector<double> eb;
  for (const auto& h : equalities) {
    Eigen::MatrixXd trial(e.rows() + 1, N);
    trial << e, row_of(h.normal).transpose();
    if (rank_of(trial) > e.rows()) {
      e = trial;
      eb.push_back(to_double(h.bound) * scale);
    }
  }
  n_eq_ = static_cast<std::size_t>(e.rows());
  g_.resize(static_cast<Eigen::Index>(inequalities.size()), N);
  gb_.resize(static_cast<Eigen::Index>(inequalities.size()));
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    g_.row(static_cast<Eigen::Index>(i)) = row_of(inequalities[i].normal).transpose();
    gb_[static_cast<Eigen::Index>(i)] = to_double(inequalities[i].bound) * scale;
  }
  for (std::size_t k = 0; k + n_eq_ <= n; ++k) {
    detail::for_each_subset(inequalities.size(), k, [&](const std::vector<std::size_t>& s) {
      ActiveSet as;
      as.rows = s;
      as.a.resize(static_cast<Eigen::Index>(n_eq_ + k), N);
      as.b.resize(static_cast<Eigen::Index>(n_eq_ + k));
      for (std::size_t r = 0; r < n_eq_; ++r) {
        as.a.row(static_cast<Eigen::Index>(r)) = e.row(static_cast<Eigen::Index>(r));
        as.b[static_cast<Eigen::Index>(r)] = eb[r];
      }
      for (std::size_t r = 0; r < k; ++r) {
        as.a.row(static_cast<Eigen::Index>(n_eq_ + r)) = g_.row(static_cast<Eigen::Index>(s[r]));
        as.b[static_cast<Eigen::Index>(n_eq_ + r)] = gb_[static_cast<Eigen::Index>(s[r])];
      }
      if (rank_of(as.a) < as.a.rows()) return true;
      if (as.a.rows() > 0) as.solve = (as.a * as.a.transpose()).inverse();
      active_.push_back(std::move(as));
      return true;
    });
  }
}

FloatPolyhedron FloatPolyhedron::component(const TropicalComplex& pi, std::size_t alpha, double scale) {
  const Component& c = pi.components[alpha];
  if (c.empty) return FloatPolyhedron();
  const auto& h = pi.subdivision.height;
  std::vector<Halfspace> facets;
  for (auto b : c.neighbours)
    facets.push_back({h.support[b] - h.support[alpha], h.heights[b] - h.heights[alpha]});
  return FloatPolyhedron(pi.dim(), {}, facets, scale);
}

FloatPolyhedron FloatPolyhedron::face(const TropicalFace& face, std::size_t n, double scale) {
  return FloatPolyhedron(n, face.equalities, face.inequalities, scale);
}

bool FloatPolyhedron::contains(const Eigen::VectorXd& p, double tol) const {
  if (empty_) return false;
  for (Eigen::Index i = 0; i < g_.rows(); ++i)
    if (g_.row(i).dot(p) > gb_[i] + tol * (1.0 + std::abs(gb_[i]))) return false;
  for (const auto& as : active_) {
    if (!as.rows.empty()) continue;
    if (as.a.rows() == 0) return true;
    return ((as.a * p - as.b).array().abs() <= tol * (1.0 + as.b.array().abs())).all();
  }
  return true;
}

Eigen::VectorXd FloatPolyhedron::project(const Eigen::VectorXd& p) const {
  if (contains(p)) return p;
  Eigen::VectorXd best;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& as : active_) {
    Eigen::VectorXd x = p;
    if (as.a.rows() > 0) {
      const Eigen::VectorXd lambda = as.solve * (as.a * p - as.b);
      // Inequality multipliers must be nonnegative at the projection.
      bool kkt = true;
      for (std::size_t r = 0; r < as.rows.size(); ++r)
        if (lambda[static_cast<Eigen::Index>(n_eq_ + r)] < -1e-12) kkt = false;
      if (!kkt) continue;
      x = p - as.a.transpose() * lambda;
    }
    bool feasible = true;
    for (Eigen::Index i = 0; i < g_.rows() && feasible; ++i)
      feasible = g_.row(i).dot(x) <= gb_[i] + 1e-9 * (1.0 + std::abs(gb_[i]) + x.norm());
    if (!feasible) continue;
    const double d = (x - p).norm();
    if (d < best_d) {
      best_d = d;
      best = x;
    }
  }
  return best;
}

double FloatPolyhedron::distance_lower_bound(const Eigen::VectorXd& p) const {
  if (empty_) return std::numeric_limits<double>::infinity();
  double lb = 0;
  for (Eigen::Index i = 0; i < g_.rows(); ++i) lb = std::max(lb, (g_.row(i).dot(p) - gb_[i]) / g_.row(i).norm());
  return lb;
}

double FloatPolyhedron::distance(const Eigen::VectorXd& p) const {
  if (empty_) return std::numeric_limits<double>::infinity();
  const Eigen::VectorXd x = project(p);
  if (x.size() == 0) return std::numeric_limits<double>::infinity();
  return (x - p).norm();
}

}  // namespace tropmirror::tropical
