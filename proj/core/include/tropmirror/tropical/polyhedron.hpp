#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "tropmirror/tropical/complex.hpp"

namespace tropmirror::tropical {

// Floating copy of an H-rep polyhedron {E u = e, G u ≤ g} with exact
// Euclidean projection. The projection enumerates candidate active sets of at
// most n rows, each with a precomputed pseudo-inverse, and keeps the nearest
// feasible candidate; at desk scale (≤ ~10 rows) this is cheap and has no
// iteration tolerance.
class FloatPolyhedron {
 public:
  FloatPolyhedron() = default;
  FloatPolyhedron(std::size_t n, const std::vector<Halfspace>& equalities,
                  const std::vector<Halfspace>& inequalities, double scale = 1.0);

  // C_α scaled by `scale`, described by its facets only. An empty component
  // gives an empty polyhedron (distance +∞).
  static FloatPolyhedron component(const TropicalComplex& pi, std::size_t alpha, double scale = 1.0);
  static FloatPolyhedron face(const TropicalFace& face, std::size_t n, double scale = 1.0);

  bool empty() const noexcept { return empty_; }
  std::size_t dim() const noexcept { return n_; }
  bool contains(const Eigen::VectorXd& p, double tol = 1e-12) const;
  Eigen::VectorXd project(const Eigen::VectorXd& p) const;
  double distance(const Eigen::VectorXd& p) const;
  // Largest violation of a single inequality; never exceeds distance(p).
  double distance_lower_bound(const Eigen::VectorXd& p) const;

 private:
  struct ActiveSet {
    std::vector<std::size_t> rows;  // inequality rows held tight
    Eigen::MatrixXd a;              // all active rows (equalities first)
    Eigen::VectorXd b;
    Eigen::MatrixXd solve;          // (A Aᵀ)⁻¹
  };

  std::size_t n_ = 0;
  bool empty_ = true;
  std::size_t n_eq_ = 0;
  Eigen::MatrixXd g_;
  Eigen::VectorXd gb_;
  std::vector<ActiveSet> active_;
};

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace tropmirror::tropical
